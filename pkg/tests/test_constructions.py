# tests/test_constructions.py
import pytest

from modelo import constructions
from modelo.containment import string_contains
from modelo.errores import DomainError, UnknownCatalogKeyError
from modelo.seqcore import Cycle


def test_rosario_ingenuo():
    assert constructions.naive_rosary(4).values == (1, 2, 3, 4, 2, 3, 4, 2)
    assert constructions.naive_rosary(2).values == (1, 2)
    for n in range(3, 12):
        assert len(constructions.naive_rosary(n)) == n * n - 3 * n + 4
    with pytest.raises(DomainError):
        constructions.naive_rosary(1)


@pytest.mark.parametrize("n, largo", [(4, 8), (6, 18), (8, 32), (10, 50)])
def test_teorema_par_longitudes(n, largo):
    c = constructions.theorem1_rosary(n)
    assert len(c) == largo
    assert c.n == n


def test_teorema_par_plantillas():
    assert constructions.theorem1_rosary(4).values == (1, 2, 3, 4, 1, 4, 3, 2)
    assert constructions.theorem1_rosary(6).values == (
        1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 1, 6, 5, 4, 3, 2
    )


@pytest.mark.parametrize("n", [2, 5, 7])
def test_teorema_par_rechaza(n):
    with pytest.raises(DomainError):
        constructions.theorem1_rosary(n)


def test_teorema_impar_plantillas():
    assert constructions.theorem2_rosary(5).values == (1, 2, 3, 4, 5, 1, 2, 3, 5, 4, 3, 2)
    assert len(constructions.theorem2_rosary(7)) == 25
    assert len(constructions.theorem2_rosary(9)) == 41


@pytest.mark.parametrize("n", [3, 6, 8])
def test_teorema_impar_rechaza(n):
    with pytest.raises(DomainError):
        constructions.theorem2_rosary(n)


def test_longitud_cerrada_coincide_con_la_construccion():
    for n in range(4, 40):
        assert constructions.theorem_length(n) == len(constructions.theorem_rosary(n))
    assert constructions.theorem_length(3) is None


@pytest.mark.parametrize("n, esperado", [
    (8, "Thm1a(2)"),
    (10, "Thm1b(2)"),
    (9, "Thm2a(2)"),
    (7, "Thm2b(1)"),
])
def test_identificador_de_construccion(n, esperado):
    assert str(constructions.construction_id(n)) == esperado


def test_identificador_fuera_de_rango():
    with pytest.raises(DomainError):
        constructions.construction_id(3)


# ─────────────────────────────────────────────────────────
# CATÁLOGO
# ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("clave, largo", [
    ("fig1-n2", 2),
    ("fig1-n3", 4),
    ("fig1-n4", 8),
    ("fig1-n5", 12),
    ("fig2-n6", 17),
    ("list-n6-01", 17),
    ("list-n6-10", 17),
    ("n8-31", 31),
    ("cx-n21", 221),
    ("cx-n33", 544),
])
def test_longitudes_del_catalogo(clave, largo):
    assert len(constructions.catalog(clave)) == largo


def test_catalogo_clave_desconocida():
    with pytest.raises(UnknownCatalogKeyError):
        constructions.catalog("fig9-n99")


def test_lectura_del_rosario_17():
    assert constructions.catalog("fig2-n6").values == (
        1, 2, 3, 4, 5, 6, 1, 3, 4, 5, 6, 2, 1, 6, 5, 4, 3
    )


@pytest.mark.parametrize("caso, n, largo", [("n21", 21, 221), ("n33", 33, 544), ("cx-n21", 21, 221)])
def test_instancias_de_contraejemplo(caso, n, largo):
    permutacion, ciclo = constructions.counterexample_instance(caso)
    assert permutacion.n == n
    assert len(ciclo) == largo
    assert ciclo.n == n


def test_contraejemplo_desconocido():
    with pytest.raises(UnknownCatalogKeyError):
        constructions.counterexample_instance("n25")


@pytest.mark.parametrize("clave, n", [("ex-thm1a-n8", 8), ("ex-thm1b-n10", 10)])
def test_ejemplos_en_la_cadena_de_la_prueba(clave, n):
    permutacion = constructions.catalog_permutation(clave)
    assert permutacion.n == n
    assert string_contains(constructions.theorem1_proof_string(n), permutacion.values)


def test_cadena_de_la_prueba():
    assert constructions.theorem1_proof_string(4) == (1, 4, 3, 2, 1, 2, 3, 4)
    with pytest.raises(DomainError):
        constructions.theorem1_proof_string(5)


# ─────────────────────────────────────────────────────────
# COTAS
# ─────────────────────────────────────────────────────────

def test_tabla_de_cotas_n6():
    filas = {f.n: f for f in constructions.bounds_table(10)}
    assert sorted(filas) == list(range(2, 11))
    assert filas[6].catalog_length == 17
    assert filas[6].theorem_length == 18
    assert filas[6].best_length == 17
    assert filas[8].catalog_length == 31
    assert filas[2].naive_length == 2
    assert filas[2].theorem_length is None
    assert filas[5].odd_bound == pytest.approx(12.75)


def test_corolario_hasta_101():
    filas = constructions.bounds_table(101)
    assert all(f.corollary_ok for f in filas)
    for f in filas:
        if f.n % 2 and f.theorem_length is not None:
            assert f.theorem_length < f.n * f.n / 2 + f.n / 4 - 1


def test_tabla_requiere_n_max():
    with pytest.raises(DomainError):
        constructions.bounds_table(1)


def test_plantilla_impar_es_ciclo():
    c = constructions.odd_template(5, 1, 3, 0)
    assert isinstance(c, Cycle)
    assert c.values == constructions.theorem2_rosary(5).values

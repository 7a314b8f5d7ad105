# tests/test_containment.py
import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from modelo import constructions
from modelo.containment import (
    ENGINES,
    NaiveEngine,
    NextOccurrenceTable,
    NextTableEngine,
    cycle_contains_permutation,
    cyclic_contains,
    is_rosary,
    permutaciones_con_prefijo,
    prefijos,
    start_label,
    string_contains,
    string_contains_all_permutations,
)
from modelo.errores import AlphabetError, CostLimitError, DomainError
from modelo.seqcore import Cycle, Permutation, relabel, reverse, rotate

CLAVES_17 = ["fig2-n6"] + [f"list-n6-{i:02d}" for i in range(1, 11)]


def ciclos(n_max: int = 6, r_max: int = 20):
    return st.integers(min_value=2, max_value=n_max).flatmap(
        lambda n: st.lists(st.integers(min_value=1, max_value=n), min_size=1, max_size=r_max)
        .map(lambda v: Cycle(tuple(v), n))
    )


# ─────────────────────────────────────────────────────────
# CADENAS
# ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("texto, patron, esperado", [
    ((1, 2, 1, 3), (1, 3, 2), False),
    ((1, 3, 1, 2), (1, 3, 2), True),
    ((1, 2, 3), (), True),
    ((1, 2, 3), (3, 1), False),
])
def test_subsecuencia(texto, patron, esperado):
    assert string_contains(texto, patron) is esperado


def test_tabla_de_siguiente_ocurrencia():
    tabla = NextOccurrenceTable((1, 3, 1, 2), 3)
    assert tabla.next(0, 1) == 0
    assert tabla.next(1, 1) == 2
    assert tabla.next(3, 3) is None
    for i, v in enumerate(tabla.text):
        assert tabla.next(i, v) == i
    with pytest.raises(AlphabetError):
        NextOccurrenceTable((1, 4), 3)


@settings(max_examples=1000, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=3), max_size=12),
    st.lists(st.integers(min_value=1, max_value=3), max_size=5),
)
def test_voraz_contra_enumeracion(texto, patron):
    exhaustivo = any(
        tuple(texto[i] for i in indices) == tuple(patron)
        for indices in itertools.combinations(range(len(texto)), len(patron))
    )
    assert string_contains(texto, patron) is exhaustivo


# ─────────────────────────────────────────────────────────
# CONTENCIÓN
# ─────────────────────────────────────────────────────────

def test_contencion_grado_2():
    veredicto = cycle_contains_permutation(Cycle.of((1, 2)), (2, 1))
    assert veredicto.contained
    assert veredicto.start_index == 2
    assert veredicto.case_key == "2_1"


@pytest.mark.parametrize("motor", ["naive", "nexttable"])
def test_contencion_desde_el_segundo_uno(motor):
    veredicto = cycle_contains_permutation(Cycle.of((1, 2, 1, 3)), Permutation.of((1, 3, 2)), engine=motor)
    assert veredicto.contained
    assert veredicto.start_index == 3
    assert veredicto.case_key == "1_2"


def test_no_contenida():
    veredicto = cycle_contains_permutation(Cycle.of((1, 2, 3)), (1, 3, 2))
    assert not veredicto.contained
    assert veredicto.start_index is None
    assert veredicto.case_key is None


def test_contencion_valida_alfabeto():
    with pytest.raises(AlphabetError):
        cycle_contains_permutation(Cycle.of((1, 2, 1)), (1, 3, 2))
    with pytest.raises(DomainError):
        cycle_contains_permutation(Cycle.of((1, 2)), (2, 1), engine="magic")


def test_etiqueta_de_inicio():
    c = Cycle.of((1, 2, 1, 3, 1))
    assert [start_label(c, j) for j in (1, 3, 5)] == ["1_1", "1_2", "1_3"]


def test_contencion_ciclica():
    assert not cyclic_contains(Cycle.of((1, 2, 3)), Cycle.of((1, 3, 2)))
    assert cyclic_contains(Cycle.of((1, 2, 3, 1, 3, 2, 1)), Cycle.of((1, 3, 2)))
    assert cyclic_contains(Cycle.of((1, 2)), (1, 2))
    assert cyclic_contains(Cycle.of((1, 2)), ())


def test_sin_motor_usa_el_configurado(monkeypatch, tmp_path):
    ruta = tmp_path / "rosary-config.json"
    ruta.write_text(json.dumps({'engine': 'naive'}), encoding="utf-8")
    monkeypatch.setenv("ROSARY_CONFIG", str(ruta))

    llamadas = []

    class MotorEspia(NaiveEngine):
        def first_starts(self, c, patterns):
            llamadas.append(len(patterns))
            return super().first_starts(c, patterns)

    monkeypatch.setitem(ENGINES, 'naive', MotorEspia())

    veredicto = cycle_contains_permutation(Cycle.of((1, 2, 1, 3)), (1, 3, 2))
    assert veredicto.contained and veredicto.start_index == 3
    assert not cyclic_contains(Cycle.of((1, 2, 3)), (1, 3, 2))
    assert llamadas == [1, 3]


def test_contencion_con_cualquier_motor():
    for motor in (None, "naive", "nexttable"):
        assert cycle_contains_permutation(Cycle.of((1, 2, 1, 3)), (1, 3, 2), engine=motor).start_index == 3
        assert cyclic_contains(Cycle.of((1, 2, 3, 1, 3, 2, 1)), (1, 3, 2), engine=motor)


@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_motores_coinciden(data):
    c = data.draw(ciclos())
    p = data.draw(st.permutations(list(range(1, c.n + 1))))
    naive = NaiveEngine().contains(c, p)
    tabla = NextTableEngine().contains(c, p)
    assert naive == tabla


def test_motores_coinciden_en_todas_las_permutaciones():
    for valores in [(1, 2, 1, 3), (1, 2, 3, 4, 1, 4, 3, 2), (2, 2, 1, 3, 1, 4, 3)]:
        c = Cycle.of(valores)
        perms = np.asarray(list(itertools.permutations(range(1, c.n + 1))), dtype=np.int64)
        assert (NaiveEngine().first_starts(c, perms) == NextTableEngine().first_starts(c, perms)).all()


@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_equivariancia_por_reetiquetado(data):
    c = data.draw(ciclos())
    p = data.draw(st.permutations(list(range(1, c.n + 1))))
    sigma = data.draw(st.permutations(list(range(1, c.n + 1))))
    original = cycle_contains_permutation(c, p).contained
    reetiquetado = cycle_contains_permutation(relabel(c, sigma), tuple(sigma[v - 1] for v in p)).contained
    assert original is reetiquetado


@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_dualidad_por_inversion(data):
    c = data.draw(ciclos())
    p = data.draw(st.permutations(list(range(1, c.n + 1))))
    directa = cycle_contains_permutation(c, p).contained
    invertida = cycle_contains_permutation(reverse(c), tuple(reversed(p))).contained
    assert directa is invertida


# ─────────────────────────────────────────────────────────
# VERIFICACIÓN DE ROSARIOS
# ─────────────────────────────────────────────────────────

def test_rosario_de_grado_2():
    reporte = is_rosary(Cycle.of((1, 2)), 2)
    assert reporte.is_rosary
    assert reporte.checked == 2


def test_no_rosario_con_testigos():
    reporte = is_rosary(Cycle.of((1, 2, 3)), 3)
    assert not reporte.is_rosary
    assert reporte.checked == 6
    assert reporte.missing == ((1, 3, 2), (2, 1, 3), (3, 2, 1))
    assert reporte.missing_count == 3


def test_salida_temprana():
    reporte = is_rosary(Cycle.of((1, 2, 3)), 3, early_exit=True)
    assert not reporte.is_rosary
    assert reporte.checked == 2
    assert reporte.missing == ((1, 3, 2),)


def test_tope_de_testigos():
    reporte = is_rosary(Cycle.of((1, 2, 3, 4)), 4, witness_cap=2)
    assert reporte.missing_count > 2
    assert len(reporte.missing) == 2
    assert list(reporte.missing) == sorted(reporte.missing)


def test_limite_de_costo():
    with pytest.raises(CostLimitError) as info:
        is_rosary(Cycle.of(tuple(range(1, 12))), 11)
    assert info.value.estimado > 0


def test_reporte_serializable():
    datos = is_rosary(Cycle.of((1, 2, 3)), 3).to_dict()
    assert set(datos) >= {'n', 'length', 'is_rosary', 'checked', 'missing', 'elapsed_ms', 'engine'}
    assert datos['missing'][0] == [1, 3, 2]


def test_rosario_17_del_catalogo():
    reporte = is_rosary(constructions.catalog("fig2-n6"), 6)
    assert reporte.is_rosary
    assert reporte.checked == 720


@pytest.mark.parametrize("clave", ["fig1-n2", "fig1-n3", "fig1-n4", "fig1-n5"])
def test_rosarios_pequenos_del_catalogo(clave):
    c = constructions.catalog(clave)
    assert is_rosary(c, c.n).is_rosary


@pytest.mark.parametrize("clave", CLAVES_17)
def test_rosarios_de_longitud_17(clave):
    c = constructions.catalog(clave)
    assert len(c) == 17
    assert is_rosary(c, 6).is_rosary


def test_rosario_de_grado_8_longitud_31():
    assert is_rosary(constructions.catalog("n8-31"), 8, early_exit=True).is_rosary


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_rosarios_de_los_teoremas(n):
    assert is_rosary(constructions.theorem_rosary(n), n, early_exit=True).is_rosary


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_rosario_ingenuo_verifica(n):
    assert is_rosary(constructions.naive_rosary(n), n, early_exit=True).is_rosary


@pytest.mark.slow
def test_teorema_impar_n9_en_paralelo():
    reporte = is_rosary(constructions.theorem2_rosary(9), 9, workers=2)
    assert reporte.is_rosary
    assert reporte.checked == 362880


def test_reparto_en_bloques_lexicograficos():
    bloques = prefijos(9)
    assert len(bloques) == 9
    unidos = np.vstack([permutaciones_con_prefijo(5, pre) for pre in prefijos(5)])
    assert [tuple(f) for f in unidos.tolist()] == list(itertools.permutations(range(1, 6)))


def test_paralelo_da_el_mismo_reporte():
    c = Cycle.of(tuple(range(1, 10)) + tuple(range(9, 0, -1)))
    secuencial = is_rosary(c, 9, workers=1)
    paralelo = is_rosary(c, 9, workers=2)
    assert secuencial.missing == paralelo.missing
    assert secuencial.missing_count == paralelo.missing_count
    assert secuencial.checked == paralelo.checked


@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_invariancia_por_rotacion(data):
    c = data.draw(ciclos(n_max=4, r_max=10))
    j = data.draw(st.integers(min_value=1, max_value=len(c)))
    assert is_rosary(rotate(c, j), c.n).is_rosary is is_rosary(c, c.n).is_rosary


@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_quitar_duplicado_adyacente(data):
    c = data.draw(ciclos(n_max=4, r_max=10))
    i = data.draw(st.integers(min_value=0, max_value=len(c) - 1))
    con_duplicado = Cycle(c.values[:i + 1] + c.values[i:], c.n)
    assert is_rosary(con_duplicado, c.n).is_rosary is is_rosary(c, c.n).is_rosary


# ─────────────────────────────────────────────────────────
# CADENAS CON TODAS LAS PERMUTACIONES
# ─────────────────────────────────────────────────────────

def test_cadena_rosario_17_duplicada():
    c = constructions.catalog("fig2-n6")
    assert string_contains_all_permutations(c.values + c.values, 6) == (True, None)


def test_cadena_identidad():
    contiene, primera = string_contains_all_permutations((1, 2, 3), 3)
    assert not contiene
    assert primera == (1, 3, 2)


def test_cadena_ingenua_duplicada():
    s = (1, 2, 3, 4, 2, 3, 4, 2)
    assert string_contains_all_permutations(s + s, 4)[0]


def test_duplicacion_de_rosarios_verificados():
    rosarios = [constructions.catalog(k) for k in ["fig1-n2", "fig1-n3", "fig1-n4", "fig1-n5"] + CLAVES_17]
    rosarios += [constructions.theorem_rosary(n) for n in (4, 5, 6, 7)]
    for c in rosarios:
        assert string_contains_all_permutations(c.values + c.values, c.n)[0]


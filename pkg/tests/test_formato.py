# tests/test_formato.py
import json

import pytest

from modelo import constructions
from modelo.catalogo import Catalogo
from modelo.errores import FormatError
from modelo.formato_texto import formatear, leer_archivo, leer_entradas, parse_secuencia
from modelo.reportes import Report, cotas_a_csv, cotas_a_texto, version_completa


# ─────────────────────────────────────────────────────────
# FORMATO DE TEXTO
# ─────────────────────────────────────────────────────────

def test_parse_con_espacios():
    assert parse_secuencia(" 1, 2 ,3") == (1, 2, 3)


@pytest.mark.parametrize("texto", ["", "1,,2", "1,2,", "1,a"])
def test_parse_invalido(texto):
    with pytest.raises(FormatError):
        parse_secuencia(texto)


def test_leer_entradas_con_comentarios():
    texto = "# encabezado\n\n1,2,1,3  # fig1-n3\n2,1\n"
    entradas = leer_entradas(texto)
    assert [e.valores for e in entradas] == [(1, 2, 1, 3), (2, 1)]
    assert entradas[0].comentario == "fig1-n3"
    assert entradas[1].comentario == ""
    assert entradas[0].linea == 3


def test_error_indica_la_linea():
    with pytest.raises(FormatError) as info:
        leer_entradas("1,2\n1,x\n")
    assert info.value.linea == 2
    assert "línea 2" in str(info.value)


def test_archivo_inexistente(tmp_path):
    with pytest.raises(FormatError):
        leer_archivo(str(tmp_path / "nada.txt"))


def test_formatear():
    assert formatear((1, 2, 3)) == "1,2,3"
    assert formatear([1, 2], "fig1-n2") == "1,2  # fig1-n2"
    assert leer_entradas(formatear((1, 2), "fig1-n2"))[0].valores == (1, 2)


# ─────────────────────────────────────────────────────────
# CATÁLOGO
# ─────────────────────────────────────────────────────────

def test_catalogo_singleton_y_claves():
    cat = Catalogo()
    assert cat is Catalogo()
    claves = cat.claves()
    for clave in ["fig1-n2", "fig2-n6", "list-n6-01", "list-n6-10", "n8-31", "cx-n21", "cx-n33"]:
        assert clave in claves
    assert "cx-n21" not in cat.claves_rosario()
    assert "n8-31" in cat.claves_rosario()


def test_huella_del_catalogo():
    huella = Catalogo().checksum()
    assert len(huella) == 12
    int(huella, 16)
    assert version_completa().endswith(huella)


# ─────────────────────────────────────────────────────────
# REPORTES
# ─────────────────────────────────────────────────────────

def test_reporte_json():
    reporte = Report(command="verify", inputs={'n': 3}, result={'is_rosary': False}, elapsed_ms=1.23456)
    datos = json.loads(reporte.to_json())
    assert datos['elapsed_ms'] == 1.235
    assert datos['version'] == version_completa()
    leido = Report.from_json(reporte.to_json())
    assert leido.command == "verify"
    assert leido.result == {'is_rosary': False}


def test_cotas_csv_vacios_y_booleanos():
    filas = constructions.bounds_table(3)
    lineas = cotas_a_csv(filas).splitlines()
    assert len(lineas) == 3
    # n=2 y n=3 no tienen construcción de teorema
    assert lineas[1].split(",")[2] == ""


def test_cotas_texto_usa_guiones():
    texto = cotas_a_texto(constructions.bounds_table(3))
    fila2 = texto.splitlines()[1].split()
    assert fila2[0] == "2"
    assert fila2[2] == "-"
    assert fila2[-1] in ("si", "no")

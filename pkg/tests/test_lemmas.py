# tests/test_lemmas.py
import itertools

import pytest

from modelo import lemmas
from modelo.containment import cyclic_contains
from modelo.errores import DomainError
from modelo.seqcore import Permutation

EJEMPLO_N8 = (1, 5, 7, 6, 3, 4, 8, 2)


def test_predicado_lema1_no_dispara_en_el_ejemplo():
    ld = lemmas.decomposition_of(EJEMPLO_N8)
    assert lemmas.lemma1_predicate(ld, 2, 2) is None
    assert all(ld.window_sum(i, 2) == 2 for i in range(1, 5))


def test_predicado_lema1_menor_indice():
    ld = lemmas.decomposition_of((1, 3, 2))
    assert lemmas.lemma1_predicate(ld, 1, 1) == 1
    # Con M = 5 el umbral y - M + 1 es 0
    assert lemmas.lemma1_predicate(lemmas.decomposition_of(EJEMPLO_N8), 1, 5) == 1


def test_ventana_no_puede_exceder_x():
    ld = lemmas.decomposition_of((1, 3, 2))
    with pytest.raises(DomainError):
        lemmas.lemma1_predicate(ld, 2, 1)
    with pytest.raises(DomainError):
        lemmas.lucky_indices((1, 3, 2), lemmas.LuckyIndexQuery(2, 1, 1))


def test_objetivo_lema1():
    assert lemmas.lemma1_target(3, 1, 1).values == (1, 2, 3, 2)
    c = lemmas.lemma1_target(5, 2, 3)
    assert len(c) == 2 * 5 + 4 + 1 * 5 + 4


def test_objetivo_lema2():
    assert lemmas.lemma2_target(4, 1, 1, 2).values == (1, 2, 3, 4, 1, 2, 4, 3, 2, 1)
    assert len(lemmas.lemma2_target(9, 2, 2, 6)) == 2 * 9 + 6 + 2 * 9
    assert lemmas.lemma2_target(3, 1, 0, 1).values == (1, 3, 2, 1)
    with pytest.raises(DomainError):
        lemmas.lemma2_target(4, 1, 1, 5)


def test_fin_de_bloque_afortunado():
    finales = [lemmas.lucky_block_end(EJEMPLO_N8, i) for i in range(1, 5)]
    assert finales == [5, 3, 4, 1]


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_fin_de_bloque_nunca_es_n(n):
    # n siempre va seguido de un descenso, así que ningún bloque termina en n
    for valores in itertools.permutations(range(1, n + 1)):
        x = lemmas.decomposition_of(valores).x
        finales = [lemmas.lucky_block_end(valores, i) for i in range(1, x + 1)]
        assert n not in finales, valores
        assert all(1 <= f < n for f in finales)


def test_indices_afortunados():
    assert lemmas.lucky_indices(EJEMPLO_N8, lemmas.LuckyIndexQuery(2, 2, 8)) == (1, 2, 3, 4)
    assert lemmas.lucky_indices(EJEMPLO_N8, lemmas.LuckyIndexQuery(2, 2, 3)) == (2, 4)
    assert lemmas.lucky_indices((1, 3, 2), lemmas.LuckyIndexQuery(1, 1, 1)) == (1,)


def test_consulta_afortunada_valida():
    with pytest.raises(DomainError):
        lemmas.LuckyIndexQuery(0, 1, 1)
    with pytest.raises(DomainError):
        lemmas.lucky_indices((1, 3, 2), lemmas.LuckyIndexQuery(1, 1, 4))


def test_chequeo_lema1():
    chequeo = lemmas.check_lemma1(Permutation.of((1, 3, 2)), 1, 1)
    assert chequeo.predicate_fired
    assert chequeo.containment_confirmed
    assert chequeo.index == 1

    sin_disparo = lemmas.check_lemma1(EJEMPLO_N8, 2, 2)
    assert not sin_disparo.predicate_fired
    assert sin_disparo.containment_confirmed is None


def test_chequeo_lema2():
    chequeo = lemmas.check_lemma2((1, 3, 2), 1, 1, 1)
    assert chequeo.predicate_fired
    assert chequeo.containment_confirmed
    assert cyclic_contains(lemmas.lemma2_target(3, 1, 1, 1), (1, 3, 2))


@pytest.mark.parametrize("n, esperado", [
    (8, {'lemma1': (2, 2)}),
    (10, {'lemma1': (2, 3)}),
    (9, {'lemma1': (2, 2), 'lemma2': (2, 2, 6)}),
    (7, {'lemma1': (2, 1), 'lemma2': (2, 1, 5)}),
])
def test_parametros_de_los_teoremas(n, esperado):
    assert lemmas.theorem_parameters(n) == esperado


@pytest.mark.parametrize("n", [4, 5])
def test_barrido_lema1(n):
    res = lemmas.lemma1_sweep(n)
    assert res.violations == ()
    assert res.fired == res.confirmed
    assert res.fired > 0


@pytest.mark.parametrize("n", [4, 5])
def test_barrido_lema2(n):
    res = lemmas.lemma2_sweep(n)
    assert res.violations == ()
    assert res.fired == res.confirmed
    assert res.fired > 0


@pytest.mark.slow
def test_barridos_n6():
    for barrido in (lemmas.lemma1_sweep, lemmas.lemma2_sweep):
        res = barrido(6)
        assert res.violations == ()
        assert res.fired == res.confirmed


def test_caso_de_igualdad_n8():
    # Si el predicado con K = M = 2 no dispara: x = y = 4 y toda ventana suma 2
    for resto in itertools.permutations(range(2, 9)):
        ld = lemmas.decomposition_of((1,) + resto)
        if lemmas.lemma1_predicate(ld, min(2, ld.x), 2) is None:
            assert (ld.x, ld.y) == (4, 4)
            assert all(ld.window_sum(i, 2) == 2 for i in range(1, 5))

import random

import pytest

from tlmonoid import (
    AlphabetError,
    Word,
    boundary_tuples,
    check_derivation,
    equal_words,
    evaluate,
    hat,
    normal_form_E,
    relation_set,
    word_from_text,
    word_to_text,
    xi_template,
)
from tlmonoid.etranslate import _EBuilder, _hat_indices


def W(n, text):
    return word_from_text(n, text)


def test_every_template_replays_to_the_hat_image():
    # replay every Omega relation's template on hat(lhs), with context on
    # both sides, and land exactly on hat(rhs)
    for n in range(3, 8):
        for rel in relation_set(n, "Omega"):
            tmpl = xi_template(n, rel.rid)
            pad = [n - 1, 1] if n > 2 else []
            b = _EBuilder(n, pad + _hat_indices(n, rel.lhs) + pad)
            b.run(tmpl, offset=len(pad))
            assert b.word == pad + _hat_indices(n, rel.rhs) + pad, rel.rid


def test_template_steps_are_pure_xi():
    for n in (3, 5, 7):
        for rel in relation_set(n, "Omega"):
            for s in xi_template(n, rel.rid):
                assert s.rid.startswith("E")


def test_alias_template_is_empty():
    assert xi_template(5, "A") == ()


def test_telescope_expansion_round_trip():
    b = _EBuilder(6, [3])
    b.wh_expand(0)
    assert b.word == [3, 4, 5, 5, 4, 3]
    b2 = _EBuilder(6, list(b.word))
    b2.wh_contract(0)
    assert b2.word == [3]


def test_normal_form_E_examples():
    nf, canonical, d = normal_form_E(W(5, "E1 E2 E1"))
    assert (nf.x.entries, nf.y.entries) == ((1,), (1,))
    assert word_to_text(canonical) == "E1 E2 E3 E4 E4 E3 E2 E1"
    assert check_derivation(d) == canonical

    nf, canonical, d = normal_form_E(W(5, "E4 E4"))
    assert (nf.x.entries, nf.y.entries) == ((4,), (4,))
    assert word_to_text(canonical) == "E4 E4"
    check_derivation(d)


def test_normal_form_E_far_commutation():
    a = normal_form_E(W(5, "E1 E3"))
    b = normal_form_E(W(5, "E3 E1"))
    assert (a[0].x, a[0].y) == (b[0].x, b[0].y)
    assert a[1] == b[1]


def test_normal_form_E_canonical_is_hat_of_balanced_word():
    rng = random.Random(11)
    for n in (3, 5, 7):
        for _ in range(40):
            w = Word(n, tuple(W(n, f"E{rng.randint(1, n - 1)}").letters[0]
                              for _ in range(rng.randint(0, 10))))
            nf, canonical, d = normal_form_E(w)
            assert canonical == hat(nf.word)
            t, _ = evaluate(w)
            bl, br = boundary_tuples(t)
            assert (nf.x, nf.y) == (bl, br)
            assert evaluate(canonical)[0] == t
            assert d.family == "Xi"
            assert all(s.rid.startswith("E") for s in d.steps)
            check_derivation(d)


def test_normal_form_E_empty_word():
    nf, canonical, d = normal_form_E(W(6, "1"))
    assert (nf.x.entries, nf.y.entries) == ((), ())
    assert len(canonical) == 0 and d.steps == ()


def test_normal_form_E_rejects_lambda_letters():
    with pytest.raises(AlphabetError):
        normal_form_E(W(5, "L1"))


def test_equal_words_across_alphabets():
    res = equal_words(W(5, "E2"), W(5, "L2 R2"))
    assert res.equal
    assert res.derivation1.family == "Xi"
    assert res.derivation2.family == "Omega"

"""Block-sum substitution into the square-free algebra and SLP transfer."""
from itertools import product as iproduct
from math import comb, factorial, prod
import random

import pytest

from slpkit.embedding import (
    EmbeddingSpec,
    phi,
    phi_matrix,
    phi_monomial,
    transfer_slp,
    verify_kernel_dims,
    verify_socle_image,
)
from slpkit.monomials import Monomial
from slpkit.quotient import AlgebraElement, AlgebraSpec, graded_basis, hilbert_vector, multiply


def compositions(total):
    """Ordered tuples of positive integers summing to total."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def test_offsets_and_derived_specs():
    es = EmbeddingSpec.from_powers((2, 2))
    assert es.n == 2 and es.m == 4
    assert es.offsets == (0, 2, 4)
    assert es.source_spec == AlgebraSpec(2, (3, 3))
    assert es.target_spec == AlgebraSpec.quadratic(4)
    mixed = EmbeddingSpec.from_powers((3, 1, 2), 5)
    assert mixed.offsets == (0, 3, 4, 6)
    assert mixed.source_spec.characteristic == 5
    assert mixed.target_spec == AlgebraSpec.quadratic(6, 5)


def test_from_spec_round_trips_the_powers():
    spec = AlgebraSpec(3, (3, 2, 4), 7)
    es = EmbeddingSpec.from_spec(spec)
    assert es == EmbeddingSpec.from_powers((2, 1, 3), 7)
    assert es.source_spec == spec
    with pytest.raises(ValueError):
        EmbeddingSpec.from_spec(AlgebraSpec(2, (1, 3)))


def test_validation():
    with pytest.raises(ValueError):
        EmbeddingSpec.from_powers(())
    with pytest.raises(ValueError):
        EmbeddingSpec.from_powers((2, 0))
    with pytest.raises(ValueError):
        phi_monomial(EmbeddingSpec.from_powers((2, 2)), (1, 0, 0))


def test_variable_images_are_block_sums():
    es = EmbeddingSpec.from_powers((2, 1))
    y1 = phi_monomial(es, (1, 0))
    assert {str(m): c for m, c in y1.terms.items()} == {"x1": 1, "x2": 1}
    y2 = phi_monomial(es, (0, 1))
    assert {str(m): c for m, c in y2.terms.items()} == {"x3": 1}


@pytest.mark.parametrize("powers", [(2, 2), (3, 1), (1, 1, 1), (2, 1), (4,)])
def test_killed_powers_die_on_the_nose(powers):
    es = EmbeddingSpec.from_powers(powers)
    for j, a in enumerate(powers):
        exps = tuple(a + 1 if k == j else 0 for k in range(len(powers)))
        assert phi_monomial(es, exps).is_zero
        alive = tuple(a if k == j else 0 for k in range(len(powers)))
        assert not phi_monomial(es, alive).is_zero


def _random_source_element(rng, spec):
    terms = {}
    for t in range(spec.socle_degree + 1):
        for m in graded_basis(spec, t):
            if rng.random() < 0.35:
                c = rng.randint(-3, 3)
                if c:
                    terms[m] = c
    return AlgebraElement(spec, terms)


@pytest.mark.parametrize("powers,char", [((2, 2), 0), ((2, 1), 0), ((2, 2), 5), ((1, 2), 3)])
def test_phi_is_a_ring_homomorphism(powers, char):
    rng = random.Random(sum(powers) * 10 + char)
    es = EmbeddingSpec.from_powers(powers, char)
    src = es.source_spec
    for _ in range(15):
        f = _random_source_element(rng, src)
        g = _random_source_element(rng, src)
        assert phi(es, multiply(f, g)) == multiply(phi(es, f), phi(es, g))
        assert phi(es, f + g) == phi(es, f) + phi(es, g)


def test_phi_accepts_raw_mappings_including_unreduced_keys():
    es = EmbeddingSpec.from_powers((2, 2))
    img = phi(es, {(1, 0): 2, (0, 1): -1})
    direct = phi_monomial(es, (1, 0)).scale(2) + phi_monomial(es, (0, 1)).scale(-1)
    assert img == direct
    # y1^3 dies in the source; its image must vanish as well
    assert phi(es, {(3, 0): 1}).is_zero


def test_socle_image_goldens():
    rec = verify_socle_image(EmbeddingSpec.from_powers((2, 2)))
    assert rec.scalar == 4 and rec.nonzero and rec.ok
    image = phi_monomial(EmbeddingSpec.from_powers((2, 2)), (2, 2))
    assert image.terms == {Monomial((1, 1, 1, 1)): 4}
    assert verify_socle_image(EmbeddingSpec.from_powers((1, 1, 1))).scalar == 1
    assert verify_socle_image(EmbeddingSpec.from_powers((3, 2))).scalar == 12
    assert verify_socle_image(EmbeddingSpec.from_powers((4,))).scalar == 24


def test_socle_image_small_characteristic():
    # scalar 4 stays a unit mod 3
    rec = verify_socle_image(EmbeddingSpec.from_powers((2, 2), 3))
    assert rec.scalar == 4 and rec.scalar_in_field == 1 and rec.nonzero and rec.ok
    # scalar 6 dies mod 3: recorded, and the image itself is checked to vanish
    rec = verify_socle_image(EmbeddingSpec.from_powers((3, 1), 3))
    assert rec.scalar == 6 and rec.scalar_in_field == 0
    assert not rec.nonzero and rec.ok


def test_degree_one_matrix_golden():
    es = EmbeddingSpec.from_powers((2, 1))
    mat = phi_matrix(es, 1)
    assert mat.to_rows() == [[1, 0], [1, 0], [0, 1]]


def test_kernel_dims_certify_injectivity():
    es = EmbeddingSpec.from_powers((2, 2))
    record = verify_kernel_dims(es)
    assert record.all_ok
    hv = hilbert_vector(es.source_spec)
    assert [d.dim_source for d in record.degrees] == list(hv)
    assert [d.dim_target for d in record.degrees] == [comb(4, j) for j in range(5)]
    assert [d.rank for d in record.degrees] == list(hv)
    partial = verify_kernel_dims(es, up_to_degree=2)
    assert len(partial.degrees) == 3


def test_kernel_dims_detect_characteristic_degeneration():
    # mod 2 the top-degree image vanishes (scalar 6), so injectivity fails there
    es = EmbeddingSpec.from_powers((3, 1), 2)
    record = verify_kernel_dims(es)
    assert not record.all_ok
    top = record.degrees[-1]
    assert top.degree == 4 and top.dim_source == 1 and top.rank == 0


def test_transfer_golden_and_characteristic_cases():
    rec = transfer_slp(EmbeddingSpec.from_powers((2, 2)))
    assert rec.slp_direct and rec.slp_via_embedding and rec.agree
    assert [c.dim_source for c in rec.embedded] == [1, 2]
    assert all(c.ok for c in rec.embedded)
    # characteristic 3 kills the source property; both routes must notice
    rec3 = transfer_slp(EmbeddingSpec.from_powers((2, 2), 3))
    assert not rec3.slp_direct and rec3.agree
    rec5 = transfer_slp(EmbeddingSpec.from_powers((2, 2), 5))
    assert rec5.slp_direct and rec5.agree


def test_all_small_compositions_verify():
    for m in range(1, 6):
        for powers in compositions(m):
            es = EmbeddingSpec.from_powers(powers)
            assert verify_socle_image(es).ok
            assert verify_socle_image(es).scalar == prod(factorial(a) for a in powers)
            assert verify_kernel_dims(es).all_ok
            rec = transfer_slp(es)
            assert rec.slp_direct and rec.slp_via_embedding


def test_composition_count():
    assert sum(1 for m in range(1, 9) for _ in compositions(m)) == 255

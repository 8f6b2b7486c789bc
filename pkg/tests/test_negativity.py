import numpy as np
import pytest

from esdsim.channels import (
    AMPLITUDE_DAMPING,
    DEPOLARIZING,
    GENERALIZED_AMPLITUDE_DAMPING,
    PHASE_DAMPING,
    NoiseModel,
    apply_local,
    kraus_set,
)
from esdsim.negativity import negativity, partial_transpose
from esdsim.states import DensityMatrix, max_entangled, schmidt_state, to_density
from oracles import partial_transpose_loops


def random_density(rng, da, db):
    d = da * db
    rho = np.zeros((d, d), complex)
    for _ in range(3):
        v = rng.normal(size=d) + 1j * rng.normal(size=d)
        rho += np.outer(v, v.conj())
    rho /= np.trace(rho).real
    return DensityMatrix(da, db, rho)


class TestPartialTranspose:
    def test_damped_state_block_moves(self):
        # the |00><11| coherence of the damped state moves to |10><01|
        t = 2 * np.log(2)  # eta = 1/2
        eta = 0.5
        rho = apply_local(kraus_set(NoiseModel(AMPLITUDE_DAMPING), 2, t), to_density(max_entangled(2, 3)), "first")
        pt = partial_transpose(rho, "first")
        expected = np.zeros((6, 6), complex)
        expected[0, 0] = eta**2 / 2
        expected[1, 3] = expected[3, 1] = eta / 2
        expected[3, 3] = (1 - eta**2) / 2
        expected[4, 4] = 0.5
        assert np.abs(pt - expected).max() < 1e-14

    def test_product_state_unchanged(self):
        rho = to_density(schmidt_state(1.0, 2, 3))
        assert np.abs(partial_transpose(rho, "first") - rho.matrix).max() < 1e-15

    def test_involution(self):
        rng = np.random.default_rng(11)
        for da, db in ((2, 3), (3, 3), (2, 2)):
            rho = random_density(rng, da, db)
            for side in ("first", "second"):
                pt = partial_transpose(rho, side)
                # the transpose is again Hermitian with unit trace, so it can
                # be wrapped and transposed a second time
                back = partial_transpose(DensityMatrix(da, db, pt), side)
                assert np.abs(back - rho.matrix).max() < 1e-12

    def test_matches_index_oracle(self):
        rng = np.random.default_rng(12)
        for da, db in ((2, 3), (3, 3)):
            rho = random_density(rng, da, db)
            for side in ("first", "second"):
                got = partial_transpose(rho, side)
                want = partial_transpose_loops(rho.matrix, da, db, side)
                assert np.abs(got - want).max() < 1e-15

    def test_hermitian_unit_trace(self):
        rng = np.random.default_rng(13)
        rho = random_density(rng, 3, 3)
        pt = partial_transpose(rho, "first")
        assert np.abs(pt - pt.conj().T).max() < 1e-12
        assert np.trace(pt).real == pytest.approx(1.0, abs=1e-12)

    def test_bad_side(self):
        rho = to_density(max_entangled(2, 3))
        with pytest.raises(ValueError, match="side"):
            partial_transpose(rho, "third")


class TestNegativity:
    def test_damped_state_at_half(self):
        # eta = 1/2 gives eta^2/2 = 1/8
        t = 2 * np.log(2)
        rho = apply_local(kraus_set(NoiseModel(AMPLITUDE_DAMPING), 2, t), to_density(max_entangled(2, 3)), "first")
        assert negativity(rho) == pytest.approx(0.125, abs=1e-12)

    def test_max_entangled_values(self):
        assert negativity(to_density(max_entangled(2, 3))) == pytest.approx(0.5, abs=1e-12)
        assert negativity(to_density(max_entangled(3, 3))) == pytest.approx(1.0, abs=1e-12)

    def test_product_state_is_ppt(self):
        assert negativity(to_density(schmidt_state(1.0, 2, 3))) == 0.0

    def test_schmidt_curve(self):
        # two-term Schmidt state: the only negative eigenvalue is -a sqrt(1-a^2)
        for a in np.linspace(0.0, 1.0, 11):
            rho = to_density(schmidt_state(a, 2, 3))
            assert negativity(rho) == pytest.approx(a * np.sqrt(1 - a * a), abs=1e-10)

    def test_side_independence(self):
        grid = (0.0, 0.5, 1.5, 4.0)
        models = [
            NoiseModel(AMPLITUDE_DAMPING),
            NoiseModel(PHASE_DAMPING),
            NoiseModel(DEPOLARIZING),
            NoiseModel(GENERALIZED_AMPLITUDE_DAMPING, p=0.3),
        ]
        for model in models:
            for dims in ((2, 3), (3, 3)):
                rho0 = to_density(max_entangled(*dims))
                for t in grid:
                    rho = apply_local(kraus_set(model, dims[0], t), rho0, "first")
                    assert negativity(rho, "first") == pytest.approx(
                        negativity(rho, "second"), abs=1e-10
                    )

    def test_never_negative_zero(self):
        rho = apply_local(
            kraus_set(NoiseModel(DEPOLARIZING), 2, 8.0), to_density(max_entangled(2, 3)), "first"
        )
        value = negativity(rho)
        assert value == 0.0
        assert not np.signbit(value)

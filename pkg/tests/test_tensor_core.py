import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_traces3, brute_traces4
from minnorm.exceptions import DimTooSmall, LengthMismatch, ShapeMismatch
from minnorm.tensor_core import (
    LABELS3,
    LABELS4,
    ansatz_basis3,
    ansatz_basis4,
    delta_delta,
    inner,
    kronecker2,
    new_tensor,
    norm2,
    traces3,
    traces4,
)


class TestNewTensor:
    def test_zero_tensor(self):
        T = new_tensor(3, 2, np.zeros(8))
        assert T.shape == (2, 2, 2)
        assert not T.any()

    def test_layout_is_row_major(self):
        n = 3
        data = np.arange(n**3, dtype=float)
        T = new_tensor(3, n, data)
        assert T[1, 2, 0] == 1 * n**2 + 2 * n + 0
        T4 = new_tensor(4, n, np.arange(n**4))
        assert T4[2, 0, 1, 2] == 2 * n**3 + 0 * n**2 + 1 * n + 2

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            new_tensor(3, 2, np.zeros(7))

    def test_dim_too_small(self):
        with pytest.raises(DimTooSmall):
            new_tensor(4, 2, np.zeros(16))
        with pytest.raises(DimTooSmall):
            new_tensor(3, 1, np.zeros(1))

    def test_values_copied_and_read_only(self):
        data = np.ones(8)
        T = new_tensor(3, 2, data)
        data[0] = 5.0
        assert T[0, 0, 0] == 1.0
        with pytest.raises(ValueError):
            T[0, 0, 0] = 2.0

    def test_bad_order(self):
        with pytest.raises(ShapeMismatch):
            new_tensor(2, 3, np.zeros(9))


class TestKronecker:
    def test_small(self):
        assert kronecker2(1).tolist() == [[1.0]]
        assert np.array_equal(kronecker2(3), np.eye(3))
        assert np.trace(kronecker2(5)) == 5


class TestTraces3:
    def test_no_repeated_pair(self):
        T = np.zeros((3, 3, 3))
        T[0, 1, 2] = 1.0
        ts = traces3(T)
        assert not (ts.t1.any() or ts.t2.any() or ts.t3.any())

    def test_vector_times_delta(self, rng):
        n = 4
        v = rng.standard_normal(n)
        T = np.einsum("i,jk->ijk", v, np.eye(n))
        ts = traces3(T)
        b1, b2, b3 = brute_traces3(T)
        np.testing.assert_allclose(ts.t1, n * v, rtol=0, atol=1e-14)
        np.testing.assert_allclose(ts.t2, v, rtol=0, atol=1e-14)
        np.testing.assert_allclose(ts.t3, v, rtol=0, atol=1e-14)
        np.testing.assert_allclose(ts.t1, b1, atol=1e-14)

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_matches_loops(self, rng, n):
        T = rng.standard_normal((n,) * 3)
        for got, want in zip(traces3(T).vectors(), brute_traces3(T)):
            np.testing.assert_allclose(got, want, rtol=1e-13, atol=1e-13)

    def test_linearity(self, rng):
        A, B = rng.standard_normal((2, 4, 4, 4))
        a, b = 1.7, -0.3
        lhs = traces3(a * A + b * B).vectors()
        rhs = [a * x + b * y for x, y in zip(traces3(A).vectors(), traces3(B).vectors())]
        for x, y in zip(lhs, rhs):
            np.testing.assert_allclose(x, y, atol=1e-13)


class TestTraces4:
    def test_delta_ik_delta_jl(self):
        n = 3
        T = delta_delta(n, "ik,jl")
        ts = traces4(T)
        I = np.eye(n)
        np.testing.assert_array_equal(ts.m13, n * I)
        np.testing.assert_array_equal(ts.m24, n * I)
        for m in (ts.m12, ts.m34, ts.m14, ts.m23):
            np.testing.assert_array_equal(m, I)
        assert ts.d1324 == 9.0
        assert ts.d1234 == 3.0
        assert ts.d1423 == 3.0
        brute = brute_traces4(T)
        for key in ("m12", "m13", "m14", "m23", "m24", "m34"):
            np.testing.assert_array_equal(getattr(ts, key), brute[key])

    def test_zero(self):
        ts = traces4(np.zeros((3,) * 4))
        assert ts.max_abs() == 0.0

    def test_antisymmetric_pair_has_zero_m12(self, rng):
        T = rng.standard_normal((4,) * 4)
        T = T - T.transpose(1, 0, 2, 3)
        assert np.abs(traces4(T).m12).max() < 1e-14

    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    def test_matches_loops(self, rng, n):
        T = rng.standard_normal((n,) * 4)
        ts = traces4(T)
        brute = brute_traces4(T)
        for key, want in brute.items():
            np.testing.assert_allclose(getattr(ts, key), want, rtol=1e-13, atol=1e-13)

    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(3, 7), seed=st.integers(0, 2**32 - 1))
    def test_double_trace_consistency(self, n, seed):
        T = np.random.default_rng(seed).standard_normal((n,) * 4)
        ts = traces4(T)
        scale = max(1.0, np.abs(T).sum())
        for m, d in [
            (ts.m12, ts.d1234), (ts.m34, ts.d1234),
            (ts.m13, ts.d1324), (ts.m24, ts.d1324),
            (ts.m14, ts.d1423), (ts.m23, ts.d1423),
        ]:
            assert abs(np.trace(m) - d) <= 1e-13 * scale


class TestInner:
    def test_single_entry(self):
        T = np.zeros((2, 2, 2))
        T[1, 0, 1] = 2.0
        assert norm2(T) == 4.0

    @pytest.mark.parametrize("n", [3, 4])
    def test_delta_delta_norm(self, n):
        for pattern in ("ij,kl", "ik,jl", "il,jk"):
            D = delta_delta(n, pattern)
            assert inner(D, D) == n**2
            # brute count of nonzero entries
            assert np.count_nonzero(D) == n**2

    def test_symmetric(self, rng):
        A, B = rng.standard_normal((2, 3, 3, 3, 3))
        assert inner(A, B) == pytest.approx(inner(B, A), rel=1e-15)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            inner(np.zeros((2, 2, 2)), np.zeros((3, 3, 3)))


class TestAnsatz3:
    def test_labels_and_zero(self):
        basis = ansatz_basis3(np.zeros((3, 3, 3)))
        assert basis.labels == LABELS3 and len(basis) == 9
        assert not basis.elements.any()

    def test_x1_element(self, rng):
        n = 3
        v = rng.standard_normal(n)
        T = np.einsum("i,jk->ijk", v, np.eye(n))
        np.testing.assert_allclose(
            ansatz_basis3(T).element("x1"), n * np.einsum("i,jk->ijk", v, np.eye(n)), atol=1e-14
        )

    def test_element_formulas(self, rng):
        n = 4
        T = rng.standard_normal((n,) * 3)
        t1, t2, t3 = brute_traces3(T)
        basis = ansatz_basis3(T)
        d = np.eye(n)
        np.testing.assert_allclose(basis.element("y3"), np.einsum("k,ij->ijk", t2, d), atol=1e-13)
        np.testing.assert_allclose(basis.element("z2"), np.einsum("j,ik->ijk", t3, d), atol=1e-13)

    def test_trace_free_tensor_orthogonal_to_all_elements(self, rng):
        n = 4
        source = rng.standard_normal((n,) * 3)
        basis = ansatz_basis3(source)
        # entries only where i, j, k are all distinct: every trace vanishes
        F = rng.standard_normal((n,) * 3)
        i, j, k = np.indices(F.shape)
        F[(i == j) | (j == k) | (i == k)] = 0.0
        assert max(np.abs(t).max() for t in brute_traces3(F)) == 0.0
        for E in basis.elements:
            assert abs(inner(F, E)) < 1e-12 * np.sqrt(norm2(F) * norm2(E))


class TestAnsatz4:
    def test_count_and_zero_tensor(self):
        basis = ansatz_basis4(np.zeros((3,) * 4))
        assert len(basis) == 75 and basis.labels == LABELS4
        assert not basis.elements[:72].any()
        assert all(basis.elements[72 + a].any() for a in range(3))

    def test_x1_with_identity_trace(self):
        n = 3
        # T = delta_ij delta_kl / n gives m12 = I
        T = delta_delta(n, "ij,kl") / n
        assert np.allclose(traces4(T).m12, np.eye(n))
        np.testing.assert_allclose(ansatz_basis4(T).element("x_1"), delta_delta(n, "ij,kl"), atol=1e-15)

    def test_superscript_uses_transpose(self, rng):
        n = 3
        T = rng.standard_normal((n,) * 4)
        M = traces4(T).m24
        basis = ansatz_basis4(T)
        # v^2 = T^(2,4)_{ki} delta_jl
        np.testing.assert_allclose(basis.element("v^2"), np.einsum("ki,jl->ijkl", M, np.eye(n)), atol=1e-14)
        # w_4 = T^(3,4)_{jk} delta_il
        np.testing.assert_allclose(
            basis.element("w_4"), np.einsum("jk,il->ijkl", traces4(T).m34, np.eye(n)), atol=1e-14
        )

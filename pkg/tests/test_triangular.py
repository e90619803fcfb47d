from pathlib import Path

import pytest

from nakayama_gp.algebra import NakayamaAlgebra, Uniserial
from nakayama_gp.defring import udr
from nakayama_gp.errors import (
    CokerNotGorenstein,
    DecomposableV,
    EmbeddingMismatch,
    InvalidModule,
    LengthMismatch,
    NotGorensteinSigma,
    PreconditionUnmet,
    UnknownLabel,
)
from nakayama_gp.triangular import (
    BimoduleDescriptor,
    GammaDescriptor,
    TriangularGpModule,
    TriangularSpec,
    reduce_udr,
    tensor_bw,
    zhang_gp_check,
)

DATA = Path(__file__).parent / "data"

# Sigma from the quiver 1 -> 2 -> 3 with a loop at 3 cubed to zero:
# Lambda = k[x]/(x^3), Gamma = path algebra of 1 -> 2, and B (x) Q(j) = Lambda for both j.
LAM = NakayamaAlgebra((3,))
GAMMA = GammaDescriptor(("1", "2"), gldim_finite=True, sigma_gorenstein=True)
BIMOD = BimoduleDescriptor({"1": (0,), "2": (0,)})


def mod(V, W=(), coker=()):
    return TriangularGpModule(tuple(Uniserial(*x) for x in V), tuple(W), tuple(Uniserial(*x) for x in coker))


U1 = mod([(0, 1)], [], [(0, 1)])
U2 = mod([(0, 2)], [], [(0, 2)])


class TestTensor:
    def test_empty(self):
        assert tensor_bw(BIMOD, []) == ()

    def test_free_of_rank_two(self):
        assert tensor_bw(BimoduleDescriptor({"e2": (0, 0)}), ["e2"]) == (0, 0)

    def test_additive(self):
        assert tensor_bw(BimoduleDescriptor({"j": (0,)}), ["j", "j"]) == (0, 0)

    def test_unknown(self):
        with pytest.raises(UnknownLabel):
            tensor_bw(BIMOD, ["3"])


class TestGpCheck:
    def test_u1_u2(self):
        for U in (U1, U2):
            verdict = zhang_gp_check(LAM, GAMMA, BIMOD, U)
            assert verdict.gorenstein_projective and verdict.v_gorenstein_projective

    def test_coker_not_gp(self):
        A = NakayamaAlgebra((4, 5))
        with pytest.raises(CokerNotGorenstein):
            zhang_gp_check(A, GammaDescriptor(("q",)), BimoduleDescriptor({"q": (0,)}), mod([(0, 1)], [], [(0, 1)]))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            zhang_gp_check(LAM, GAMMA, BIMOD, mod([(0, 2)], [], [(0, 1)]))

    def test_embedding_mismatch(self):
        # B (x) W = P(0) of length 3 cannot sit inside M(0,2) + M(0,1)
        with pytest.raises(EmbeddingMismatch):
            zhang_gp_check(LAM, GAMMA, BIMOD, mod([(0, 2), (0, 1)], ["1"], []))

    def test_wrong_declared_cokernel(self):
        A = NakayamaAlgebra((4, 5))
        gamma = GammaDescriptor(("q",))
        bimod = BimoduleDescriptor({"q": (0,)})
        # P(0) = M(0,4) is the length-4 submodule of M(1,5), leaving M(1,1), not M(0,1)
        with pytest.raises(EmbeddingMismatch):
            zhang_gp_check(A, gamma, bimod, mod([(1, 5)], ["q"], [(0, 1)]))
        # with the right cokernel the certificate is consistent but M(1,1) is not GP
        with pytest.raises(CokerNotGorenstein):
            zhang_gp_check(A, gamma, bimod, mod([(1, 5)], ["q"], [(1, 1)]))

    def test_precondition(self):
        with pytest.raises(PreconditionUnmet):
            zhang_gp_check(LAM, GammaDescriptor(("1", "2"), gldim_finite=False), BIMOD, U1)

    def test_embedding_is_reported(self):
        verdict = zhang_gp_check(LAM, GAMMA, BIMOD, mod([(0, 1), (0, 3)], ["2"], [(0, 1)]))
        assert verdict.embedding == ((0, 1),)


class TestReduce:
    def test_golden_example(self):
        for U in (U1, U2):
            R = reduce_udr(LAM, GAMMA, BIMOD, U)
            assert (R.n, R.m) == (1, 3) and R.display == "k[[t1]]/(t1^3)"

    def test_matches_lambda_side(self):
        for U in (U1, U2):
            assert reduce_udr(LAM, GAMMA, BIMOD, U) == udr(LAM, None, U.V[0])

    def test_projective(self):
        assert reduce_udr(LAM, GAMMA, BIMOD, mod([(0, 3)], ["2"], [])).display == "k"

    def test_w_independence(self):
        a = reduce_udr(LAM, GAMMA, BIMOD, mod([(0, 3)], [], [(0, 3)]))
        b = reduce_udr(LAM, GAMMA, BIMOD, mod([(0, 3)], ["1"], []))
        assert a == b

    def test_syzygy_compatibility(self):
        assert LAM.syzygy(U1.V[0]) == U2.V[0]
        assert reduce_udr(LAM, GAMMA, BIMOD, U1) == reduce_udr(LAM, GAMMA, BIMOD, U2)

    def test_not_gorenstein_sigma(self):
        with pytest.raises(NotGorensteinSigma):
            reduce_udr(LAM, GammaDescriptor(("1", "2"), sigma_gorenstein=False), BIMOD, U1)

    def test_decomposable(self):
        with pytest.raises(DecomposableV):
            reduce_udr(LAM, GAMMA, BIMOD, mod([(0, 1), (0, 3)], ["2"], [(0, 1)]))


class TestSpecFiles:
    def test_load(self):
        spec = TriangularSpec.load(DATA / "u1.json")
        assert spec.algebra == LAM and spec.module == U1
        assert spec.gamma == GAMMA

    def test_bad_vertex(self):
        data = {
            "lambda_kupisch": [3],
            "gamma": {"labels": ["1"], "gldim_finite": True, "sigma_gorenstein": True},
            "bimodule": {"1": [4]},
            "module": {"V": [], "W": [], "coker": []},
        }
        with pytest.raises(InvalidModule):
            TriangularSpec.from_dict(data)

    def test_unknown_bimodule_label(self):
        data = {
            "lambda_kupisch": [3],
            "gamma": {"labels": ["1"]},
            "bimodule": {"9": [0]},
            "module": {"V": [], "W": [], "coker": []},
        }
        with pytest.raises(UnknownLabel):
            TriangularSpec.from_dict(data)

"""
Static descriptions of what each suite and check family verifies.
"""
from __future__ import annotations

from typing import NamedTuple


class Explanation(NamedTuple):
    topic: str
    identity: str


EXPLANATIONS: dict[str, Explanation] = {
    'datum-validate': Explanation(
        "Borcherds-Cartan superdatum axioms",
        "a_ii is 2 or a non-positive even integer; a_ij <= 0 off the diagonal and vanishes "
        "exactly when a_ji does; rows of odd vertices are even; r_i a_ij = r_j a_ji with r_i > 0. "
        "Q_ij uses only exponents (a, b) with r_i a + r_j b = -i.j and keeps its two extreme "
        "coefficients nonzero; gamma_ij gamma_ji = -1/2 on odd pairs and 1 otherwise.",
    ),
    'datum-validate.q-symmetry': Explanation(
        "symmetry of the Q polynomials",
        "Q_ij(u, v) = Q_ji(v, u) for every pair of distinct vertices.",
    ),
    'datum-validate.defaults': Explanation(
        "default coefficient tables",
        "The default Q table (extreme coefficients 1, interior coefficients 0) and the default "
        "gamma table pass validation.",
    ),
    'covering-gram': Explanation(
        "the bilinear form on the covering algebra",
        "The Gram matrix of the form on the words of weight nu is symmetric, and the form is "
        "compatible with the twisted coproduct: {xy, z} = {x (x) y, rho(z)} for every split of a word.",
    ),
    'serre-radical': Explanation(
        "quantum Serre relations in the radical",
        "Every Serre element sum_a (-1)^a pi^{p(a;i,j;n)} theta_i^(a) theta_j^n theta_i^(m-a) with "
        "m = 1 - n a_ij, and every commutator theta_i theta_j - pi^{p(i)p(j)} theta_j theta_i with "
        "i.j = 0, is annihilated by the Gram matrix of its weight; the test through iterated "
        "rho components agrees.",
    ),
    'serre-radical.theta': Explanation(
        "generators outside the radical",
        "{theta_i, theta_i} = (1 - pi^{p(i)} q_i^2)^-1 is nonzero, so theta_i is not in the radical.",
    ),
    'boson-identities': Explanation(
        "the quantum boson superalgebra at pi = -1",
        "Recursions and operator identities of the derivations e'_i and e''_i on the free algebra.",
    ),
    'boson-identities.binomial-recursion': Explanation(
        "pi = -1 binomial recursion",
        "q_i^-k [n, k] + (-1)^{p(i)(n-k+1)} q_i^{n-k+1} [n, k-1] = [n+1, k] for n <= 8 and r in {1, 2}.",
    ),
    'boson-identities.congruence': Explanation(
        "parity exponent congruence",
        "p(a;i,j) + (b-1)p(i) + p(a+1;i,j) + (m-1)p(i) + p(i)p(j) is even whenever a + b = m.",
    ),
    'boson-identities.alternating-sum': Explanation(
        "vanishing alternating binomial sum, over odd m only when p(i) = 1",
        "sum_{a+b=m} (-1)^{a + p(a;i,j) + b p(i)p(j)} q_i^{b(m-1)} [m, a]_i vanishes for every m "
        "when p(i) = 0 and for odd m when p(i) = 1.",
    ),
    'boson-identities.commutation': Explanation(
        "commutation of the two derivations",
        "e'_i e''_j = (-1)^{p(i)p(j)} q_i^{a_ij} e''_j e'_i on all words up to the degree bound.",
    ),
    'boson-identities.serre-operator': Explanation(
        "Serre operator intertwining",
        "S f_k w = (-1)^{(m p(i) + p(j)) p(k)} q_k^{-m a_ki - a_kj} f_k S w for the Serre operator "
        "S = sum_a (-1)^{a + p(a;i,j)} [m, a]_i e'_i^a e'_j e'_i^{m-a}.",
    ),
    'boson-identities.form-agreement': Explanation(
        "boson form against the covering form",
        "<f_i x, y> = kappa_i <x, e'_i y> with kappa_i = (1 - pi^{p(i)} q_i^2)^-1 reproduces the "
        "covering form specialized at pi = -1.",
    ),
    'boson-identities.nondegeneracy': Explanation(
        "nondegeneracy modulo the Serre ideal",
        "rank of the pi = -1 Gram matrix plus the rank of the two-sided Serre ideal in weight nu "
        "equals the number of words of weight nu.",
    ),
    'rep-verify': Explanation(
        "the polynomial representation is a module",
        "Dots super-commute, distant crossings super-commute, dots pass crossings with the "
        "parity-dependent exchange rule, tau_k^2 is 0 or Q_ij, and the braid relation holds with "
        "its correction term, all as operator identities on monomials.",
    ),
    'rep-verify.sigma': Explanation(
        "divided difference operators",
        "sigma and sigma' square to zero, commute at distance and satisfy the braid relation; "
        "s_k sigma_{k+1} s_k = s_{k+1} sigma_k s_{k+1}; sigma_k agrees with its closed form on "
        "polynomials in y.",
    ),
    'qhsa-differential': Explanation(
        "straightening against the faithful representation",
        "The normal form of a product acts on the polynomial representation as the composite of "
        "the actions of its factors.",
    ),
    'qhsa-differential.independence': Explanation(
        "linear independence of normal-form symbols",
        "The symbols x^u tau_w 1_i with bounded exponents act linearly independently.",
    ),
    'onh': Explanation(
        "the algebra R(n i) for a single vertex",
        "Checks on the (odd) nil-Hecke algebra and its imaginary analogues.",
    ),
    'onh.idempotent': Explanation(
        "divided power idempotents",
        "e_{i,n} = (-1)^{C(n,3) p(i)} x_1^{n-1} ... x_{n-1} tau_w0 1_{i^n} squares to itself.",
    ),
    'onh.tau-omega0': Explanation(
        "longest crossing on the staircase monomial",
        "tau_w0 applied to x_1^{n-1} x_2^{n-2} ... x_{n-1} is the constant (-1)^{C(n,3)} for an "
        "odd real vertex.",
    ),
    'onh.center': Explanation(
        "central elements",
        "Symmetric functions in the squares x_k^2 commute with every generator of R(n i) for odd i; "
        "x_1 alone does not.",
    ),
    'onh.trivial': Explanation(
        "trivial module at an imaginary vertex",
        "Dots and crossings acting by zero defines a module of R(n i) for imaginary i: the "
        "coefficient of the bare idempotent is multiplicative.",
    ),
    'pairing': Explanation(
        "projectives against the covering form",
        "dim 1_i R(nu) 1_j equals {theta_i, theta_j} as a power series in q, for all sequences "
        "of weight nu; at nu = i both sides are (1 - pi^{p(i)} q_i^2)^-1.",
    ),
    'serre-cat': Explanation(
        "categorified Serre relation",
        "sum over even c and over odd c of pi^{p(c;i,j;n)} dim 1_k R (e_{i,c} (x) 1_{j^n} (x) e_{i,m-c}), "
        "shifted by q_i^{C(c,2) + C(m-c,2)}, agree for every sequence k; each summand also matches "
        "the form against theta_i^(c) theta_j^n theta_i^(m-c).",
    ),
    'mackey': Explanation(
        "Mackey filtration",
        "dim 1_{k l} Ind(P_a (x) P_b) equals the sum over intermediate weights lambda of the shifted "
        "dimensions of the induced pieces, with twist pi^{p(lambda)p(kappa)} q^{-lambda.kappa}.",
    ),
    'trunc-dim': Explanation(
        "idempotent truncations",
        "dim 1_k R e computed from ranks of right multiplication by e; for e = 1_i it is the plain "
        "graded dimension and for e = e_{i,n} it matches the form against theta_i^(n) after the "
        "shift q_i^{C(n,2)}.",
    ),
}


def explain(check_id: str) -> Explanation:
    """Longest registered prefix of a dotted check id"""
    parts = check_id.split('.')
    for end in range(len(parts), 0, -1):
        key = '.'.join(parts[:end])
        if key in EXPLANATIONS:
            return EXPLANATIONS[key]
    raise KeyError(f"unknown check id {check_id!r}")


def refs(check_id: str) -> str:
    return explain(check_id).topic

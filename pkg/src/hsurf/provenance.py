"""Registry of the statements that justify each emitted group.

Every :class:`~hsurf.profile.GroupInfo` names one or more keys of
``CITATIONS``; the CLI refuses to render a row whose key is missing here.
"""

CITATIONS = {
    "lefschetz": "Lefschetz hyperplane theorem: H^k(V) = H^k(CP^{n+1}) for k < n",
    "lefschetz-mono": (
        "Lefschetz hyperplane theorem: H^n(CP^{n+1}) -> H^n(V) is a primitive monomorphism"
    ),
    "kato": (
        "Kato: H^k(V) = H^k(CP^{n+1}) for n+s+2 <= k <= 2n; "
        "restriction from CP^{n+1} is multiplication by d in even degrees"
    ),
    "top-components": "H^{2n}(V) = Z^r with r the number of irreducible components",
    "smooth-lefschetz": "smooth V: H^k(V) = H^k(CP^n) for k != n and H^n(V) is free",
    "smooth-betti": (
        "smooth degree d hypersurface: b_n = ((d-1)^{n+2} + (-1)^{n+1})/d + (3(-1)^n + 1)/2"
    ),
    "smooth-euler": "smooth degree d hypersurface: chi = (n+2) - (1 + (-1)^{n+1}(d-1)^{n+2})/d",
    "outside-window": (
        "specialization sequence with concentrated vanishing cohomology: "
        "H^k(V) = H^k(V_t) = H^k(CP^n) for k outside [n, n+s+1]"
    ),
    "middle-kernel": (
        "specialization sequence: H^n(V) = ker(alpha^n) is free, so b_n(V) <= b_n(V_t)"
    ),
    "window-step": (
        "specialization sequence: b_k(V) <= rank H^{k-1}_phi(V) + b_k(CP^n) "
        "for n+1 <= k <= n+s+1"
    ),
    "window-splitting": (
        "specialization sequence: H^k(V) = ker(alpha^k) + coker(alpha^{k-1}) for n+1 <= k <= n+s"
    ),
    "top-splitting": (
        "specialization sequence: H^{n+s+1}(V) = H^{n+s+1}(CP^n) + coker(alpha^{n+s})"
    ),
    "top-degree-bound": (
        "b_{n+s+1}(V) <= 1 + sum of transversal Milnor numbers over top-dimensional strata, "
        "strict when n+s is even; the strict inequality of integers is emitted as that bound minus 1"
    ),
    "codim1-components": (
        "singularities in codimension 1: r = b_{2n}(V) <= 1 + sum of transversal Milnor numbers"
    ),
    "concentration": "H^k_phi(V) = 0 for k outside [n, n+s], and H^n_phi(V) is free",
    "homology-concentration": (
        "vanishing homology H_k(V_D, V_t) = 0 for k outside [n+1, n+s+1]; "
        "the top group H_{n+s+1} is free"
    ),
    "top-vanishing-bound": (
        "rank H^{n+s}_phi(V) <= sum of transversal Milnor numbers over top-dimensional strata"
    ),
    "isolated-vanishing": (
        "isolated singularities: H^n_phi(V) = sum over singular points of Z^{mu_x} "
        "(Milnor fiber is a bouquet of mu_x n-spheres)"
    ),
    "isolated-euler": (
        "isolated singularities: chi(V) = chi(smooth) + (-1)^{n+1} * sum of Milnor numbers"
    ),
    "curve-betti": (
        "plane curve with isolated singularities: H^0 = Z, H^2 = Z^r, "
        "H^1 free of rank r + 1 + d^2 - 3d - sum mu_x"
    ),
    "specialization-solve": (
        "ranks solved by Fourier-Motzkin elimination over the specialization sequence "
        "H^k(V) -> H^k(V_t) -> H^k_phi(V) -> H^{k+1}(V)"
    ),
    "qhm": (
        "Q-homology manifold: H^k_phi(V) tensor Q = 0 for k != n, so b_i(V) = b_i(CP^n) for i != n "
        "and b_n(V) follows from chi(V)"
    ),
    "quadric-cone": (
        "quadric of rank q: cone with vertex CP^s over a smooth quadric W_q in CP^{n-s}; "
        "H^k = H^k(CP^s) for k <= 2s, 0 for k = 2s+1, H^{k-2-2s}(W_q) for k >= 2s+2"
    ),
    "quadric-transversal": "generic transversal type of a quadric along its vertex is A_1 (mu = 1)",
    "cone-over-curve": "projective cone V over a plane curve C: H^k(V) = H^{k-2}(C) for k >= 2",
    "lefschetz-supplement": (
        "generic hyperplane H: H^k(V, V cap H) = 0 for k < n and n+s+1 < k < 2n; "
        "H^{2n}(V, V cap H) = Z^r; H^n(V, V cap H) is free"
    ),
    "stratified-euler": (
        "two-step stratification: chi(V) = chi(Y) - chi(S_1 minus Y) * mu_1 - chi(S_0) * (chi(F_0) - 1)"
    ),
    "universal-coefficients": "universal coefficient theorem: homology and cohomology ranks agree",
    "homology-outside-window": (
        "H_k(V) = H_k(V_t) = H_k(CP^n) for k <= n-1 and k >= n+s+2"
    ),
    "homology-top-free": "H_{n+s+1}(V) is free",
}


def cite(*keys: str) -> tuple[str, ...]:
    for key in keys:
        if key not in CITATIONS:
            raise KeyError(f"unregistered provenance key {key!r}")
    return tuple(keys)


def describe(keys) -> list[str]:
    return [CITATIONS[k] for k in keys]

"""Verification suites tying the closed-form results to explicit oracles.

Each check is a named callable returning True/False; the CLI runs them and
assembles a report.  Symbolic checks certify identities for every q at
once; matrix checks certify at the exact rational points supplied.
"""

from __future__ import annotations

import time
from fractions import Fraction

from . import linalg, markov, spectra
from .hecke import (HeckeElement, annihilator_check, b2r, b2r_embedded, c_op,
                    intermediate_recursion_check, jucys_murphy_scaled, m_alpha,
                    r2b, r2b_embedded, r2r, recursion_check, regular_rep_matrix,
                    top_ops, x_alpha)
from .qpoly import Q, qint
from .seminormal import SpechtRep, WordModuleRep, dipper_james_action, phi_apply
from .symmetric import Composition, derangement_count
from .tableaux import (Partition, SkewShape, d_mu, enumerate_syt, extend,
                       f_lambda, horizontal_strips, partitions_of, superstandard)


class CheckResult:
    __slots__ = ("check_id", "passed", "elapsed_ms", "detail")

    def __init__(self, check_id, passed, elapsed_ms, detail=""):
        self.check_id = check_id
        self.passed = passed
        self.elapsed_ms = elapsed_ms
        self.detail = detail

    def to_json(self):
        return {"check": self.check_id, "passed": self.passed,
                "elapsed_ms": round(self.elapsed_ms, 1), "detail": self.detail}


def sub_partitions(lam):
    out = []
    for k in range(lam.size):
        for mu in partitions_of(k):
            if lam.contains(mu):
                out.append(mu)
    return out


# -- individual checks -------------------------------------------------

def check_hecke_relations_symbolic(n):
    """Quadratic, commutation, and braid relations for T_{s_i} in H_n."""
    one = HeckeElement.one(n)
    for i in range(1, n):
        ti = HeckeElement.t_word([i], n)
        if ti * ti != ti.scale(Q - 1) + one.scale(Q):
            return False
        for j in range(i + 2, n):
            tj = HeckeElement.t_word([j], n)
            if ti * tj != tj * ti:
                return False
        if i + 1 < n:
            tj = HeckeElement.t_word([i + 1], n)
            if ti * tj * ti != tj * ti * tj:
                return False
    return True


def check_recursion(n):
    return recursion_check(n) and intermediate_recursion_check(n)


def check_push_through_lemma(n):
    """B*_{n-1} T_{s_{n-1}} B_{n-1} B_n = q R_{n-1} B_n in H_n."""
    bn = b2r(n)
    lhs = r2b_embedded(n - 1, n).mul_gen(n - 1) * b2r_embedded(n - 1, n) * bn
    rhs = ((r2b_embedded(n - 1, n) * b2r_embedded(n - 1, n)) * bn).scale(Q)
    return lhs == rhs


def check_c_factorization(n):
    for j in range(n + 1):
        c = c_op(j, n)
        col = Composition([1] * j + ([n - j] if n - j else []))
        row = Composition(([j] if j else []) + ([n - j] if n - j else []))
        hook = Composition(([j] if j else []) + [1] * (n - j))
        if c != m_alpha(col) * x_alpha(row) or c != x_alpha(hook):
            return False
    return True


def check_annihilating_polynomial(n):
    return annihilator_check(b2r(n), n) and annihilator_check(r2b(n), n)


def check_jm_commute(n):
    jms = [jucys_murphy_scaled(n, k) for k in range(2, n + 1)]
    return all(a * b == b * a for a in jms for b in jms)


def check_word_module_relations(n, q0):
    """Generator matrices on every W^lambda satisfy the Hecke relations."""
    for lam in partitions_of(n):
        wm = WordModuleRep(lam, q0)
        gens = {i: wm.gen_matrix(i) for i in range(1, n)}
        eye = linalg.identity(wm.dim)
        for i, g in gens.items():
            quad = linalg.mat_add(linalg.mat_scale(g, wm.q0 - 1),
                                  linalg.mat_scale(eye, wm.q0))
            if linalg.mat_mul(g, g) != quad:
                return False
            for j in range(i + 1, n):
                lhs = linalg.mat_mul(g, gens[j])
                rhs = linalg.mat_mul(gens[j], g)
                if j > i + 1 and lhs != rhs:
                    return False
                if j == i + 1:
                    if linalg.mat_mul(lhs, g) != linalg.mat_mul(rhs, gens[j]):
                        return False
    return True


def check_seminormal_action(n, q0):
    """Units diagonalize the Jucys-Murphy elements and follow the
    four-case generator formula."""
    for lam in partitions_of(n):
        rep = SpechtRep(lam, q0)
        wm = rep.word_module
        index = {t: k for k, t in enumerate(rep.tableaux)}
        for k, t in enumerate(rep.tableaux):
            unit = rep.units[k]
            if not any(unit):
                return False
            for m in range(1, n + 1):
                value = qint(t.content_of(m)).eval(q0)
                if wm.apply_jm(unit, m) != [value * x for x in unit]:
                    return False
            for i in range(1, n):
                expect = [Fraction(0)] * wm.dim
                for tt, c in dipper_james_action(t, i, q0).items():
                    other = rep.units[index[tt]]
                    expect = [e + c * x for e, x in zip(expect, other)]
                if wm.apply_gen(unit, i) != expect:
                    return False
    return True


def check_idempotents(n, q0):
    """Shape-lambda idempotents on W^lambda: orthogonal, idempotent, and
    their sum projects onto the Specht component (rank f^lambda, fixes
    every unit).  For n <= 4 the full cross-shape completeness
    sum over all tableaux of size n = identity is also checked."""
    for lam in partitions_of(n):
        rep = SpechtRep(lam, q0)
        wm = rep.word_module
        mats = [wm.idempotent_matrix(t) for t in rep.tableaux]
        for a, ma in enumerate(mats):
            for b, mb in enumerate(mats):
                prod = linalg.mat_mul(ma, mb)
                if a == b:
                    if prod != ma:
                        return False
                elif any(any(row) for row in prod):
                    return False
        total = mats[0]
        for m in mats[1:]:
            total = linalg.mat_add(total, m)
        if linalg.mat_mul(total, total) != total:
            return False
        trace = sum(total[i][i] for i in range(wm.dim))
        if trace != f_lambda(lam):  # rank of an idempotent is its trace
            return False
        for unit in rep.units:
            if linalg.vec_mat(unit, total) != unit:
                return False
        if n <= 4:
            everything = linalg.zeros(wm.dim, wm.dim)
            for mu in partitions_of(n):
                for t in enumerate_syt(mu):
                    everything = linalg.mat_add(everything,
                                                wm.idempotent_matrix(t))
            if everything != linalg.identity(wm.dim):
                return False
    return True


def check_tower_rule(n, q0):
    """p_t equals the product of the shape projectors of its restrictions."""
    for lam in partitions_of(n):
        wm = WordModuleRep(lam, q0)
        for t in enumerate_syt(lam):
            direct = wm.idempotent_matrix(t)
            total = linalg.identity(wm.dim)
            for k in range(1, n + 1):
                shape = t.shape_up_to(k)
                level = wm.matrix_of(lambda v: wm.apply_p_lambda(v, shape))
                total = linalg.mat_mul(total, level)
            if total != direct:
                return False
    return True


def check_phi_morphism(n, q0):
    """Phi_t commutes with the embedded H_|mu| action, and gluing satisfies
    w_{t(s)} = w_s Phi_t p_t."""
    for lam in partitions_of(n):
        rep_lam = WordModuleRep(lam, q0)
        for mu in sub_partitions(lam):
            rep_mu = WordModuleRep(mu, q0)
            skews = enumerate_syt(SkewShape(lam, mu))
            for t_skew in skews:
                for idx in range(rep_mu.dim):
                    v = [Fraction(0)] * rep_mu.dim
                    v[idx] = Fraction(1)
                    for i in range(1, max(mu.size, 1)):
                        a = phi_apply(rep_mu.apply_gen(v, i), rep_mu, rep_lam,
                                      t_skew)
                        b = rep_lam.apply_gen(
                            phi_apply(v, rep_mu, rep_lam, t_skew), i)
                        if a != b:
                            return False
            if mu.size == 0:
                continue
            rep_s = SpechtRep(mu, q0)
            for t_skew in skews:
                for k, s in enumerate(rep_s.tableaux):
                    glued = extend(s, t_skew)
                    expect = rep_lam.apply_idempotent(
                        rep_lam.basis_vector(glued.word()), glued)
                    got = phi_apply(rep_s.units[k], rep_s.word_module, rep_lam,
                                    t_skew)
                    got = rep_lam.apply_idempotent(got, glued)
                    if got != expect:
                        return False
    return True


def check_dominance_vanishing(n, q0):
    """word(s) . p_t = 0 unless s is dominated by t."""
    for lam in partitions_of(n):
        wm = WordModuleRep(lam, q0)
        tabs = enumerate_syt(lam)
        for t in tabs:
            for s in tabs:
                img = wm.apply_idempotent(wm.basis_vector(s.word()), t)
                if not s.dominance_leq(t) and any(img):
                    return False
    return True


def check_projection_compat(n, q0):
    """u Phi p_{t^strip} = u Phi p_lambda on S^mu for horizontal strips."""
    for lam in partitions_of(n):
        rep_lam = WordModuleRep(lam, q0)
        for mu in horizontal_strips(lam):
            if mu == lam or mu.size == 0:
                continue
            t_skew = superstandard(SkewShape(lam, mu))
            rep_s = SpechtRep(mu, q0)
            for unit in rep_s.units:
                v = phi_apply(unit, rep_s.word_module, rep_lam, t_skew)
                a = _apply_skew_idempotent(rep_lam, v, lam, mu, t_skew)
                b = rep_lam.apply_p_lambda(v)
                if a != b:
                    return False
    return True


def _apply_skew_idempotent(rep_lam, v, lam, mu, t_skew):
    """v . p_{t_skew}: interpolation factors for entries |mu|+1..n only."""
    from .seminormal import content_classes
    from .qpoly import qint as _qint
    q0 = rep_lam.q0
    for m in range(mu.size + 1, lam.size + 1):
        cm = t_skew.content_of(m)
        cm_val = _qint(cm).eval(q0)
        for d in content_classes(m):
            if d == cm:
                continue
            d_val = _qint(d).eval(q0)
            jv = rep_lam.apply_jm(v, m)
            v = [(jv[j] - d_val * v[j]) / (cm_val - d_val)
                 for j in range(rep_lam.dim)]
    return v


def check_one_step_recursion(n, q0):
    """Every R_{n-1}-eigenvector u on S^{lambda'} maps to zero or an
    R_n-eigenvector u Phi B_n p_lambda with eigenvalue q E + [n]_q + q^n c."""
    q0 = Fraction(q0)
    r_op = r2r(n)
    for lam in partitions_of(n):
        rep_lam = WordModuleRep(lam, q0)
        for smaller in lam.removable_corners():
            for rec in spectra.build_eigenbasis(smaller, q0):
                t_skew = superstandard(SkewShape(lam, smaller))
                rep_small = WordModuleRep(smaller, q0)
                v = phi_apply(rec.vector, rep_small, rep_lam, t_skew)
                v = rep_lam.apply_hecke(v, b2r_embedded(n, n))
                v = rep_lam.apply_p_lambda(v)
                cell_content = spectra.q_content(
                    SkewShape(lam, smaller)).eval(q0)
                value = (q0 * rec.eigenvalue_at_q0 + qint(n).eval(q0)
                         + q0 ** n * cell_content)
                image = rep_lam.apply_hecke(v, r_op)
                if image != [value * x for x in v]:
                    return False
    return True


def check_eigenbasis(n, q0):
    total = 0
    for lam in partitions_of(n):
        spectra.build_eigenbasis(lam, q0)  # raises on failure
        _, kappa = spectra.kernel_basis(lam, q0)
        if len(kappa) != d_mu(lam):
            return False
        total += f_lambda(lam) * len(kappa)
    return total == derangement_count(n)


def check_straightening(n, q0):
    for lam in partitions_of(n):
        for mu in sub_partitions(lam):
            spectra.straightening_scalars(lam, mu, q0)  # raises on failure
    return True


def check_strip_vanishing(n, q0):
    for lam in partitions_of(n):
        strips = set(horizontal_strips(lam))
        for mu in sub_partitions(lam):
            if mu in strips:
                continue
            if not spectra.strip_vanishing_check(lam, mu, q0):
                return False
    return True


def check_r2r_charpoly(n, q0, route="regular"):
    expected = linalg.poly_from_roots(
        [(e.eval(q0), m) for e, m in spectra.r2r_charpoly_factored(n)])
    if route == "specht":
        product = [Fraction(1)]
        for lam in partitions_of(n):
            _, mat = spectra.specht_r2r_matrix(lam, q0)
            factor = linalg.charpoly(mat)
            for _ in range(f_lambda(lam)):
                product = _poly_mul(product, factor)
        return product == expected
    return spectra.bruteforce_charpoly(r2r(n), q0) == expected


def check_b_charpoly(n, q0, route="regular"):
    expected = linalg.poly_from_roots(
        [(e.eval(q0), m) for e, m in spectra.b_charpoly_factored(n)])
    if route == "specht":
        for op in (b2r(n), r2b(n)):
            product = [Fraction(1)]
            for lam in partitions_of(n):
                rep = SpechtRep(lam, q0)
                mat = rep.hecke_action_matrix(op)
                factor = linalg.charpoly(mat)
                for _ in range(f_lambda(lam)):
                    product = _poly_mul(product, factor)
            if product != expected:
                return False
        return True
    return (spectra.bruteforce_charpoly(b2r(n), q0) == expected
            and spectra.bruteforce_charpoly(r2b(n), q0) == expected)


def check_bstar_kernel_lift(n, q0):
    """u in ker B*_j gives a B*_n-eigenvector m_{(1^j, n-j)} u with
    eigenvalue [n-j]_{q0}, in the regular representation."""
    bstar_n = regular_rep_matrix(r2b(n), q0)
    for j in range(2, n):
        bstar_j = regular_rep_matrix(
            HeckeElement.one(n) * r2b_embedded(j, n), q0)
        m_mat = regular_rep_matrix(
            m_alpha(Composition([1] * j + [n - j])), q0)
        value = qint(n - j).eval(q0)
        for u in linalg.left_kernel(bstar_j):
            lifted = linalg.vec_mat(u, m_mat)
            image = linalg.vec_mat(lifted, bstar_n)
            if image != [value * x for x in lifted]:
                return False
    return True


def check_mallows_stationarity(n, q0):
    mat = markov.transition_matrix(n, q0)
    if not markov.is_stochastic(mat):
        return False
    pi = markov.mallows(n, q0)
    size = len(pi)
    return [sum(pi[i] * mat[i][j] for i in range(size))
            for j in range(size)] == pi


def check_walk_spectrum(n, q0):
    """Char poly of the walk equals the formula spectrum over ([n]_q)^2."""
    q0 = Fraction(q0)
    mat = markov.transition_matrix(n, q0)
    norm = qint(n).eval(q0) ** 2
    expected = linalg.poly_from_roots(
        [(e.eval(q0) / norm, m) for e, m in spectra.r2r_charpoly_factored(n)])
    return linalg.charpoly(mat) == expected


def check_second_eigenvalue(n, q0):
    """Second-largest formula eigenvalue is [n-2]_q [n+1]_q, multiplicity n-1."""
    q0 = Fraction(q0)
    mults = {}
    for e, m in spectra.r2r_charpoly_factored(n):
        value = e.eval(q0)
        mults[value] = mults.get(value, 0) + m
    ordered = sorted(mults, reverse=True)
    second = ordered[1]
    expect = (qint(n - 2) * qint(n + 1)).eval(q0)
    return second == expect and mults[second] == n - 1


def check_positivity_degree(n):
    for row in spectra.spectrum_table(n):
        if not row.eigenvalue.is_nonneg_integral():
            return False
        if not spectra.degree_check(row.lam, row.mu):
            return False
    return True


def check_diagonalizable(n, q0):
    return spectra.diagonalizability_check(n, q0)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# -- suite runner ------------------------------------------------------

def run_suite(n, q_values, route="regular"):
    """Run every check for one n; returns a list of CheckResult."""
    results = []

    def run(check_id, fn):
        start = time.perf_counter()
        try:
            passed = bool(fn())
            detail = ""
        except Exception as exc:  # noqa: BLE001 - reported, not swallowed
            passed = False
            detail = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(check_id, passed,
                                   (time.perf_counter() - start) * 1000,
                                   detail))

    run("hecke-relations-symbolic", lambda: check_hecke_relations_symbolic(n))
    if n >= 2:
        run("recursion", lambda: check_recursion(n))
        run("push-through-lemma", lambda: check_push_through_lemma(n))
    run("c-factorization", lambda: check_c_factorization(n))
    run("annihilating-polynomial", lambda: check_annihilating_polynomial(n))
    run("jucys-murphy-commute", lambda: check_jm_commute(n))
    run("positivity-degree", lambda: check_positivity_degree(n))
    for q0 in q_values:
        tag = f"q={q0}"
        run(f"word-module-relations[{tag}]",
            lambda q=q0: check_word_module_relations(n, q))
        run(f"seminormal-action[{tag}]",
            lambda q=q0: check_seminormal_action(n, q))
        run(f"idempotents[{tag}]", lambda q=q0: check_idempotents(n, q))
        run(f"phi-morphism[{tag}]", lambda q=q0: check_phi_morphism(n, q))
        if n <= 4:
            run(f"dominance-vanishing[{tag}]",
                lambda q=q0: check_dominance_vanishing(n, q))
        run(f"projection-compat[{tag}]",
            lambda q=q0: check_projection_compat(n, q))
        run(f"straightening[{tag}]", lambda q=q0: check_straightening(n, q))
        run(f"strip-vanishing[{tag}]",
            lambda q=q0: check_strip_vanishing(n, q))
        if Fraction(q0) > 0:
            run(f"eigenbasis[{tag}]", lambda q=q0: check_eigenbasis(n, q))
            if n >= 2:
                run(f"one-step-recursion[{tag}]",
                    lambda q=q0: check_one_step_recursion(n, q))
        run(f"r2r-charpoly[{tag},{route}]",
            lambda q=q0: check_r2r_charpoly(n, q, route))
        run(f"b-charpoly[{tag},{route}]",
            lambda q=q0: check_b_charpoly(n, q, route))
        if route == "regular" and n >= 3:
            run(f"bstar-kernel-lift[{tag}]",
                lambda q=q0: check_bstar_kernel_lift(n, q))
        if route == "regular" and n <= 4:
            run(f"diagonalizable[{tag}]",
                lambda q=q0: check_diagonalizable(n, q))
        if Fraction(q0) >= 1:
            run(f"mallows-stationarity[{tag}]",
                lambda q=q0: check_mallows_stationarity(n, q))
            if route == "regular" and n <= 4:
                run(f"walk-spectrum[{tag}]",
                    lambda q=q0: check_walk_spectrum(n, q))
            if n >= 3:
                run(f"second-eigenvalue[{tag}]",
                    lambda q=q0: check_second_eigenvalue(n, q))
    return results

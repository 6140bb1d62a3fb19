//! Brute force universal-property checkers. These quantify over every
//! object and hom-set of the category, so they are strictly for small
//! instances; the fast structured implementations are tested against
//! them rather than trusted outright.

use alloc::vec::Vec;

use crate::category::{Category, ComplementSquare, PullbackSquare};
use crate::error::{CatError, Result};

/// All monomorphisms `i -> j`.
pub fn monos_between<C: Category>(cat: &C, i: &C::Obj, j: &C::Obj) -> Vec<C::Mor> {
    cat.hom(i, j).into_iter().filter(|m| cat.is_mono(m)).collect()
}

/// Checks that `apex` with legs `p : apex -> A` and `q : apex -> B`
/// is a limit of the cospan `f : A -> T`, `g : B -> T`: the square
/// commutes and every competing cone factors through it uniquely.
pub fn is_pullback_square<C: Category>(
    cat: &C,
    apex: &C::Obj,
    p: &C::Mor,
    q: &C::Mor,
    f: &C::Mor,
    g: &C::Mor,
) -> bool {
    let via_f = match cat.compose(f, p) {
        Ok(m) => m,
        Err(_) => return false,
    };
    let via_g = match cat.compose(g, q) {
        Ok(m) => m,
        Err(_) => return false,
    };
    if via_f != via_g {
        return false;
    }
    let a = cat.dom(f);
    let b = cat.dom(g);
    for t in cat.objects() {
        let into_apex = cat.hom(&t, apex);
        for u in cat.hom(&t, &a) {
            let fu = cat.compose(f, &u).expect("composable by construction");
            for v in cat.hom(&t, &b) {
                let gv = cat.compose(g, &v).expect("composable by construction");
                if fu != gv {
                    continue;
                }
                let mediating = into_apex
                    .iter()
                    .filter(|w| {
                        cat.compose(p, w).map(|m| m == u).unwrap_or(false)
                            && cat.compose(q, w).map(|m| m == v).unwrap_or(false)
                    })
                    .count();
                if mediating != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks a claimed pullback of `f` along the monomorphism `alpha`.
pub fn is_pullback<C: Category>(
    cat: &C,
    f: &C::Mor,
    alpha: &C::Mor,
    square: &PullbackSquare<C::Obj, C::Mor>,
) -> bool {
    cat.dom(&square.left_mono) == square.apex
        && cat.dom(&square.top) == square.apex
        && cat.cod(&square.left_mono) == cat.dom(f)
        && cat.cod(&square.top) == cat.dom(alpha)
        && cat.is_mono(&square.left_mono)
        && is_pullback_square(cat, &square.apex, &square.left_mono, &square.top, f, alpha)
}

/// Checks a claimed complement diagram for monomorphisms
/// `alpha : i -> j` and `beta : j -> k`. The factorisation
/// `upper . embed = beta . alpha` must hold with both factors mono,
/// the solid square must be a pullback, and every pullback cone over
/// `(beta, some mono into k)` compatible with `alpha` must lift
/// through `upper`.
pub fn complement_is_valid<C: Category>(
    cat: &C,
    alpha: &C::Mor,
    beta: &C::Mor,
    square: &ComplementSquare<C::Obj, C::Mor>,
) -> bool {
    let gamma = &square.embed;
    let delta = &square.upper;
    if cat.dom(gamma) != cat.dom(alpha)
        || cat.cod(gamma) != square.mid
        || cat.dom(delta) != square.mid
        || cat.cod(delta) != cat.cod(beta)
        || !cat.is_mono(gamma)
        || !cat.is_mono(delta)
    {
        return false;
    }
    let through = match cat.compose(beta, alpha) {
        Ok(m) => m,
        Err(_) => return false,
    };
    match cat.compose(delta, gamma) {
        Ok(m) if m == through => {}
        _ => return false,
    }
    let i = cat.dom(alpha);
    if !is_pullback_square(cat, &i, gamma, alpha, delta, beta) {
        return false;
    }
    // Lifting clause: whenever the outer square below is a pullback,
    //
    //   m --eta--> n --zeta--> k
    //   |                      ^
    //   xi                     beta
    //   v                      |
    //   i --------alpha------> j
    //
    // some phi : n -> mid satisfies delta.phi = zeta and
    // phi.eta = gamma.xi.
    let k = cat.cod(beta);
    for n in cat.objects() {
        let into_mid = cat.hom(&n, &square.mid);
        for zeta in monos_between(cat, &n, &k) {
            for m in cat.objects() {
                for xi in monos_between(cat, &m, &i) {
                    let alpha_xi = cat.compose(alpha, &xi).expect("composable");
                    let gamma_xi = cat.compose(gamma, &xi).expect("composable");
                    for eta in monos_between(cat, &m, &n) {
                        let outer = PullbackSquare {
                            apex: m.clone(),
                            left_mono: eta.clone(),
                            top: alpha_xi.clone(),
                        };
                        if !is_pullback(cat, &zeta, beta, &outer) {
                            continue;
                        }
                        let lifts = into_mid.iter().any(|phi| {
                            cat.compose(delta, phi).map(|x| x == zeta).unwrap_or(false)
                                && cat
                                    .compose(phi, &eta)
                                    .map(|x| x == gamma_xi)
                                    .unwrap_or(false)
                        });
                        if !lifts {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Exhaustive search for a complement diagram, validating each
/// candidate in full. Quadruple-nested over the category, so keep the
/// instance small.
pub fn search_complement<C: Category>(
    cat: &C,
    alpha: &C::Mor,
    beta: &C::Mor,
) -> Result<ComplementSquare<C::Obj, C::Mor>> {
    if cat.cod(alpha) != cat.dom(beta) {
        return Err(CatError::CompositionMismatch);
    }
    if !cat.is_mono(alpha) || !cat.is_mono(beta) {
        return Err(CatError::NotMono);
    }
    let i = cat.dom(alpha);
    let k = cat.cod(beta);
    for l in cat.objects() {
        for gamma in monos_between(cat, &i, &l) {
            for delta in monos_between(cat, &l, &k) {
                let square = ComplementSquare {
                    mid: l.clone(),
                    embed: gamma.clone(),
                    upper: delta.clone(),
                };
                if complement_is_valid(cat, alpha, beta, &square) {
                    return Ok(square);
                }
            }
        }
    }
    Err(CatError::ComplementNotFound)
}

use std::collections::HashSet;

use super::WeylElt;
use crate::rootsys::RootSystem;

/// Bruhat order via the subword property, scanning one reduced word of `v`.
///
/// Walking `v = s_{a_1} ⋯ s_{a_t}` from the left, strip `s_{a_k}` from `u`
/// whenever it is a left descent of what remains of `u`; then `u ≤ v` iff
/// nothing is left. (Lifting property: for `s ∈ D_L(v)`, `u ≤ v` iff
/// `su ≤ sv` when `s ∈ D_L(u)` and iff `u ≤ sv` otherwise.)
pub fn bruhat_le(rs: &RootSystem, u: &WeylElt, v: &WeylElt) -> bool {
    if u.length() > v.length() {
        return false;
    }
    let mut rest = u.clone();
    for &a in v.reduced_word(rs).letters() {
        if rest.is_identity() {
            break;
        }
        if rest.is_left_descent(rs, a) {
            rest = WeylElt::simple(rs, a).mul(rs, &rest);
        }
    }
    rest.is_identity()
}

/// Bruhat order as the transitive closure of `x < x·s_β` for positive roots
/// `β` with `ℓ(x·s_β) > ℓ(x)`. Exponential; meant as a cross-check.
pub fn bruhat_le_by_chains(rs: &RootSystem, u: &WeylElt, v: &WeylElt) -> bool {
    let refl: Vec<WeylElt> = rs.positive_roots().iter().map(|b| WeylElt::reflection(rs, b).unwrap()).collect();
    let mut seen = HashSet::new();
    let mut stack = vec![u.clone()];
    while let Some(x) = stack.pop() {
        if &x == v {
            return true;
        }
        if x.length() >= v.length() || !seen.insert(x.clone()) {
            continue;
        }
        for t in &refl {
            let y = x.mul(rs, t);
            if y.length() > x.length() {
                stack.push(y);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::all_elements;
    use super::*;

    #[test]
    fn small_cases() {
        let rs = RootSystem::from_type("A2").unwrap();
        let e = WeylElt::identity(&rs);
        let s1 = WeylElt::simple(&rs, 0);
        let s2 = WeylElt::simple(&rs, 1);
        for v in all_elements(&rs) {
            assert!(bruhat_le(&rs, &e, &v));
        }
        assert!(!bruhat_le(&rs, &s1, &s2));
        let s1s2 = WeylElt::from_word(&rs, &[0, 1]).unwrap();
        let w0 = WeylElt::from_word(&rs, &[0, 1, 0]).unwrap();
        assert!(bruhat_le(&rs, &s1s2, &w0));
        assert!(!bruhat_le(&rs, &w0, &s1s2));
    }

    #[test]
    fn partial_order_agreeing_with_chains() {
        for t in ["A2", "B2", "G2"] {
            let rs = RootSystem::from_type(t).unwrap();
            let all = all_elements(&rs);
            for u in &all {
                assert!(bruhat_le(&rs, u, u));
                for v in &all {
                    let le = bruhat_le(&rs, u, v);
                    assert_eq!(le, bruhat_le_by_chains(&rs, u, v), "{t} {u:?} {v:?}");
                    if le {
                        assert!(u.length() <= v.length());
                        if bruhat_le(&rs, v, u) {
                            assert_eq!(u, v);
                        }
                        for x in &all {
                            if bruhat_le(&rs, v, x) {
                                assert!(bruhat_le(&rs, u, x));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rank_three_spot_check() {
        let rs = RootSystem::from_type("A3").unwrap();
        let all = all_elements(&rs);
        for u in all.iter().step_by(5) {
            for v in all.iter().step_by(3) {
                assert_eq!(bruhat_le(&rs, u, v), bruhat_le_by_chains(&rs, u, v));
            }
        }
    }
}

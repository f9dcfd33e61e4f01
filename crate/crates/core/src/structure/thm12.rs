use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::structure::classes::{centralizer, conjugacy_classes};
use crate::structure::subgroups::{is_subgroup, p_part, sylow, sylow_within};

/// Which of the three involution hypotheses hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct InvolutionHypotheses {
    /// A Sylow 2-subgroup is elementary abelian.
    pub sylow2_elementary_abelian: bool,
    /// All involutions are conjugate.
    pub involutions_conjugate: bool,
    /// The centralizer of an involution is a Sylow 2-subgroup times a
    /// subgroup of odd order.
    pub centralizer_split: bool,
}

impl InvolutionHypotheses {
    pub fn all(&self) -> bool {
        self.sylow2_elementary_abelian && self.involutions_conjugate && self.centralizer_split
    }
}

/// Evaluates the three hypotheses under which a group has no
/// `(2, n/4, 2)`-factorization.
pub fn involution_hypotheses(g: &GroupTable) -> Result<InvolutionHypotheses> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let p = sylow(g, 2)?;
    let sylow2_elementary_abelian = p.iter().all(|x| x == 0 || g.element_order(x) == 2);

    let involutions: Vec<usize> = (1..n).filter(|&x| g.element_order(x) == 2).collect();
    let classes = conjugacy_classes(g);
    let rep = involutions[0];
    let involutions_conjugate = classes
        .iter()
        .find(|c| c.contains(rep))
        .is_some_and(|c| involutions.iter().all(|&i| c.contains(i)));

    // conjugate involutions have conjugate centralizers, so one
    // representative per class decides the condition for that class
    let centralizer_split = involutions_conjugate && centralizer_splits(g, rep, p.len());
    Ok(InvolutionHypotheses { sylow2_elementary_abelian, involutions_conjugate, centralizer_split })
}

fn centralizer_splits(g: &GroupTable, i: usize, sylow_order: usize) -> bool {
    let c = centralizer(g, i);
    if p_part(c.len(), 2) != sylow_order {
        return false;
    }
    let odd: crate::bitset::ElementSet = c.iter().filter(|&x| g.element_order(x) % 2 == 1).collect();
    if !is_subgroup(g, &odd) {
        return false;
    }
    let Ok(p) = sylow_within(g, &c, 2) else { return false };
    p.len() * odd.len() == c.len()
        && p.intersection(&odd).len() == 1
        && p.iter().all(|x| odd.iter().all(|y| g.mul(x, y) == g.mul(y, x)))
}

/// True iff all three hypotheses hold.
pub fn thm12_hypotheses(g: &GroupTable) -> Result<bool> {
    involution_hypotheses(g).map(|h| h.all())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{affine_gf2s, cyclic, from_permutations, Permutation, DEFAULT_CAP};

    fn perms(d: usize, cs: &[&str]) -> GroupTable {
        let gens: Vec<_> = cs.iter().map(|c| Permutation::from_cycles(d, c).unwrap()).collect();
        from_permutations(&gens, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn a4_and_affine_groups_satisfy() {
        assert!(thm12_hypotheses(&perms(4, &["(12)(34)", "(123)"])).unwrap());
        assert!(thm12_hypotheses(&affine_gf2s(3).unwrap()).unwrap());
        assert!(thm12_hypotheses(&affine_gf2s(4).unwrap()).unwrap());
    }

    #[test]
    fn s4_fails_elementary_abelian() {
        let h = involution_hypotheses(&perms(4, &["(1234)", "(12)"])).unwrap();
        assert!(!h.sylow2_elementary_abelian);
        assert!(!h.all());
    }

    #[test]
    fn klein_group_has_unconjugate_involutions() {
        let v = perms(4, &["(12)(34)", "(13)(24)"]);
        let h = involution_hypotheses(&v).unwrap();
        assert!(h.sylow2_elementary_abelian && !h.involutions_conjugate);
    }

    #[test]
    fn odd_order_rejected() {
        assert_eq!(thm12_hypotheses(&cyclic(9).unwrap()).unwrap_err(), Error::OddOrder(9));
    }
}

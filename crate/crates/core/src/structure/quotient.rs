use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::structure::classes::is_normal;
use crate::structure::subgroups::is_subgroup;

/// A factor group `G/N`. Coset `i` has smallest element `reps[i]`; cosets are
/// numbered by that representative, so coset 0 is `N` itself.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub normal: ElementSet,
    pub table: GroupTable,
    pub reps: Vec<usize>,
    pub coset_of: Vec<usize>,
}

impl Quotient {
    pub fn new(g: &GroupTable, normal: &ElementSet) -> Result<Quotient> {
        if !is_subgroup(g, normal) {
            return Err(Error::NotASubgroup);
        }
        if !is_normal(g, normal) {
            return Err(Error::NotNormal);
        }
        let n = g.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for y in g.left_translate(x, normal).iter() {
                coset_of[y] = id;
            }
        }
        let m = reps.len();
        let mul = (0..m * m).map(|k| coset_of[g.mul(reps[k / m], reps[k % m])] as u8).collect();
        let inv = reps.iter().map(|&r| coset_of[g.inv(r)] as u8).collect();
        let labels = reps
            .iter()
            .map(|&r| if r == 0 { "N".to_string() } else { format!("{}N", g.label(r)) })
            .collect();
        let mut generators: Vec<(String, usize)> = Vec::new();
        for (name, x) in g.generators() {
            generators.push((name.clone(), coset_of[*x]));
        }
        let table = GroupTable::from_parts(m, mul, inv, labels, generators);
        Ok(Quotient { normal: *normal, table, reps, coset_of })
    }

    /// Full preimage of a set of cosets.
    pub fn preimage(&self, cosets: &ElementSet) -> ElementSet {
        self.coset_of.iter().enumerate().filter(|(_, &c)| cosets.contains(c)).map(|(x, _)| x).collect()
    }

    /// Chosen representatives of a set of cosets.
    pub fn lift_reps(&self, cosets: &ElementSet) -> ElementSet {
        cosets.iter().map(|c| self.reps[c]).collect()
    }
}

/// The factor group table `G/N`.
pub fn quotient(g: &GroupTable, normal: &ElementSet) -> Result<GroupTable> {
    Quotient::new(g, normal).map(|q| q.table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{find_isomorphism, from_permutations, Permutation, DEFAULT_CAP};
    use crate::structure::subgroups::{generated_subgroup, sylow};

    fn perms(d: usize, cs: &[&str]) -> GroupTable {
        let gens: Vec<_> = cs.iter().map(|c| Permutation::from_cycles(d, c).unwrap()).collect();
        from_permutations(&gens, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let a4 = perms(4, &["(12)(34)", "(123)"]);
        assert_eq!(quotient(&a4, &a4.elements()).unwrap().order(), 1);
    }

    #[test]
    fn a4_mod_klein_is_c3() {
        let a4 = perms(4, &["(12)(34)", "(123)"]);
        let v = sylow(&a4, 2).unwrap();
        let q = quotient(&a4, &v).unwrap();
        q.audit().unwrap();
        assert_eq!(q.order(), 3);
        assert!(find_isomorphism(&q, &crate::group::cyclic(3).unwrap()).is_some());
    }

    #[test]
    fn non_normal_rejected() {
        let a4 = perms(4, &["(12)(34)", "(123)"]);
        let p3 = sylow(&a4, 3).unwrap();
        assert_eq!(quotient(&a4, &p3).unwrap_err(), Error::NotNormal);
        let not_sub: ElementSet = [0, 1, 2].into_iter().collect();
        if generated_subgroup(&a4, &[1, 2]).len() != 3 {
            assert_eq!(quotient(&a4, &not_sub).unwrap_err(), Error::NotASubgroup);
        }
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;

/// A permutation of `{0, .., degree-1}`.
///
/// Products compose left to right: `p * q` applies `p` first, then `q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation on points `1..=degree`, e.g. `(1 3 2)(4 5)` or the
    /// compact `(132)(45)` when every point is a single digit. `e` or `()` is
    /// the identity.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Ok(Permutation { images });
        }
        let bad = |msg: &str| Error::InvalidPermutation(format!("`{text}`: {msg}"));
        let mut rest = text;
        let mut seen = vec![false; degree];
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| bad("expected `(`"))?;
            if !rest[..open].trim().is_empty() {
                return Err(bad("stray characters"));
            }
            let close = rest[open..].find(')').ok_or_else(|| bad("unclosed cycle"))? + open;
            let body = &rest[open + 1..close];
            let points: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>().map_err(|_| bad("bad point")))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad("bad point")))
                    .collect::<Result<_>>()?
            };
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(bad("point out of range"));
                }
                if seen[p - 1] {
                    return Err(bad("point repeated"));
                }
                seen[p - 1] = true;
            }
            for (i, &p) in points.iter().enumerate() {
                images[p - 1] = points[(i + 1) % points.len()] - 1;
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles of length at least two, as 1-based points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        let sep = if self.degree() <= 9 { "" } else { " " };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cayley table of the group generated by named permutations; element labels
/// are cycle forms.
pub fn from_named_permutations(gens: &[(String, Permutation)], cap: usize) -> Result<GroupTable> {
    let degree = gens.first().map_or(1, |(_, p)| p.degree());
    if let Some((name, _)) = gens.iter().find(|(_, p)| p.degree() != degree) {
        return Err(Error::InvalidPermutation(format!("generator `{name}` has a different degree")));
    }
    GroupTable::from_closure(
        Permutation::identity(degree),
        gens,
        |a, b| a.then(b),
        |p, _| p.to_string(),
        cap,
    )
}

/// Cayley table of the group generated by `gens`; generators are named
/// `p0, p1, ..`.
pub fn from_permutations(gens: &[Permutation], cap: usize) -> Result<GroupTable> {
    let named: Vec<(String, Permutation)> =
        gens.iter().enumerate().map(|(i, p)| (format!("p{i}"), p.clone())).collect();
    from_named_permutations(&named, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::table::DEFAULT_CAP;

    fn cyc(d: usize, s: &str) -> Permutation {
        Permutation::from_cycles(d, s).unwrap()
    }

    #[test]
    fn cycle_parsing_forms_agree() {
        assert_eq!(cyc(5, "(132)"), cyc(5, "(1 3 2)"));
        assert_eq!(cyc(4, "(14)(23)").images(), &[3, 2, 1, 0]);
        assert_eq!(cyc(4, "e"), Permutation::identity(4));
        assert!(Permutation::from_cycles(4, "(15)").is_err());
        assert!(Permutation::from_cycles(4, "(121)").is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        // (12) then (23): 1 -> 2 -> 3, 3 -> 2, 2 -> 1
        let p = cyc(3, "(12)").then(&cyc(3, "(23)"));
        assert_eq!(p, cyc(3, "(132)"));
        assert_eq!(p.to_string(), "(132)");
    }

    #[test]
    fn invalid_images_rejected() {
        assert!(matches!(Permutation::from_images(vec![0, 0, 1]), Err(Error::InvalidPermutation(_))));
        assert!(Permutation::from_images(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn empty_generating_set_gives_trivial_group() {
        let g = from_permutations(&[], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn a5_from_five_cycle_and_three_cycle() {
        let g = from_permutations(&[cyc(5, "(12345)"), cyc(5, "(123)")], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 60);
        g.audit().unwrap();
    }

    #[test]
    fn a4_from_klein_and_three_cycle() {
        let g = from_permutations(&[cyc(4, "(12)(34)"), cyc(4, "(13)(24)"), cyc(4, "(123)")], DEFAULT_CAP)
            .unwrap();
        assert_eq!(g.order(), 12);
        let involutions = (1..12).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 3);
        assert_eq!(g.label(0), "e");
    }

    #[test]
    fn cap_enforced() {
        let err = from_permutations(&[cyc(5, "(12345)"), cyc(5, "(12)")], 100).unwrap_err();
        assert_eq!(err, Error::OrderExceedsCap { cap: 100 });
    }
}

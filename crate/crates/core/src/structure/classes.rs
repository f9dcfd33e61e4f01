use crate::bitset::ElementSet;
use crate::group::GroupTable;
use crate::structure::subgroups::{extend_subgroup, subgroup_generated_by_set};

/// Conjugacy classes, ordered by smallest element.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<ElementSet> {
    let mut seen = ElementSet::EMPTY;
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if seen.contains(x) {
            continue;
        }
        let class: ElementSet = (0..g.order()).map(|h| g.conjugate(x, h)).collect();
        seen.union_with(&class);
        classes.push(class);
    }
    classes
}

pub fn centralizer(g: &GroupTable, x: usize) -> ElementSet {
    (0..g.order()).filter(|&h| g.mul(h, x) == g.mul(x, h)).collect()
}

/// `{h : h^-1 S h = S}`.
pub fn normalizer(g: &GroupTable, s: &ElementSet) -> ElementSet {
    (0..g.order()).filter(|&h| g.conjugate_set(s, h) == *s).collect()
}

pub fn center(g: &GroupTable) -> ElementSet {
    (0..g.order()).filter(|&x| (0..g.order()).all(|h| g.mul(h, x) == g.mul(x, h))).collect()
}

pub fn is_normal(g: &GroupTable, s: &ElementSet) -> bool {
    (0..g.order()).all(|h| s.iter().all(|x| s.contains(g.conjugate(x, h))))
}

/// Least normal subgroup containing `s`.
pub fn normal_closure(g: &GroupTable, s: &ElementSet) -> ElementSet {
    let mut conj = ElementSet::EMPTY;
    for x in s {
        for h in 0..g.order() {
            conj.insert(g.conjugate(x, h));
        }
    }
    subgroup_generated_by_set(g, &conj)
}

/// All normal subgroups, as joins of normal closures of conjugacy classes,
/// sorted by order then lexicographically.
pub fn normal_subgroups(g: &GroupTable) -> Vec<ElementSet> {
    let mut minimal: Vec<ElementSet> = conjugacy_classes(g).iter().map(|c| subgroup_generated_by_set(g, c)).collect();
    minimal.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(b)));
    minimal.dedup();
    let mut all = vec![ElementSet::singleton(0)];
    let mut i = 0;
    while i < all.len() {
        let n = all[i];
        for m in &minimal {
            if m.is_subset(&n) {
                continue;
            }
            let joined = extend_subgroup(g, &n, &m.to_vec());
            if !all.contains(&joined) {
                all.push(joined);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(b)));
    all
}

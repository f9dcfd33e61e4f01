use crate::bitset::ElementSet;
use crate::group::GroupTable;
use crate::structure::classes::is_normal;
use crate::structure::quotient::quotient;
use crate::structure::subgroups::{divisors, generated_subgroup, is_prime, subgroup_of_order};

/// A normal subgroup of prime order, if one exists (smallest generator first).
pub fn prime_order_normal_subgroup(g: &GroupTable) -> Option<ElementSet> {
    (1..g.order())
        .filter(|&x| is_prime(g.element_order(x)))
        .map(|x| generated_subgroup(g, &[x]))
        .find(|c| is_normal(g, c))
}

/// Supersolvability by peeling off normal subgroups of prime order.
///
/// Any choice of prime-order normal subgroup works: quotients of
/// supersolvable groups are supersolvable, and a cyclic normal subgroup with
/// supersolvable quotient gives a supersolvable group.
pub fn is_supersolvable(g: &GroupTable) -> bool {
    let mut current = g.clone();
    loop {
        if current.order() == 1 {
            return true;
        }
        match prime_order_normal_subgroup(&current) {
            Some(a) => current = quotient(&current, &a).expect("normal by construction"),
            None => return false,
        }
    }
}

/// True if `g` has a subgroup of every order dividing `|g|`.
pub fn is_clt(g: &GroupTable) -> bool {
    divisors(g.order()).into_iter().all(|m| matches!(subgroup_of_order(g, m), Ok(Some(_))))
}

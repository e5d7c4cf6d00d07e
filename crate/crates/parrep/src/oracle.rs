//! Independent slow-route computations used to cross-check the fast
//! implementations elsewhere in the crate.  Everything here is
//! deliberately naive: conjugacy-class arithmetic from first principles
//! and a character-theoretic route to the tableau-counting coefficients.

use crate::symmetric::{factorial, mn_character, partitions_of, Partition};
use crate::{Error, Result};

/// The centralizer order `z = Π i^{m_i}·m_i!` of a cycle type, where
/// `m_i` counts the parts of length `i`.
pub fn centralizer_order(class: &Partition) -> u128 {
    let mut mult = std::collections::BTreeMap::new();
    for &part in class.parts() {
        *mult.entry(part as u128).or_insert(0u128) += 1;
    }
    mult.into_iter()
        .map(|(part, m)| part.pow(m as u32) * factorial(m))
        .product()
}

/// The number of permutations of the symmetric group with the given cycle
/// type: `n!` divided by the centralizer order.
pub fn class_size(class: &Partition) -> u128 {
    factorial(class.size() as u128) / centralizer_order(class)
}

/// The concatenation of two cycle types, re-sorted into a partition.
fn join_types(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("sorted positive parts")
}

/// The tableau-counting coefficient computed from characters instead of
/// fillings: restrict `χ^nu` to the product of the symmetric groups on
/// `|lambda|` and `|mu|` letters and pair it against `χ^lambda · χ^mu`,
/// summing over pairs of cycle types weighted by class sizes.
pub fn lr_via_characters(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<i64> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(Error::InvalidInput(format!(
            "|{lambda}| + |{mu}| != |{nu}|"
        )));
    }
    let mut total: i128 = 0;
    for alpha in partitions_of(lambda.size()) {
        for beta in partitions_of(mu.size()) {
            let weight = (class_size(&alpha) * class_size(&beta)) as i128;
            let joined = join_types(&alpha, &beta);
            total += weight
                * mn_character(lambda, &alpha)? as i128
                * mn_character(mu, &beta)? as i128
                * mn_character(nu, &joined)? as i128;
        }
    }
    let order = (factorial(lambda.size() as u128) * factorial(mu.size() as u128)) as i128;
    if total % order != 0 {
        return Err(Error::OracleInconsistency(format!(
            "character pairing {total}/{order} for ({lambda},{mu}) in {nu} is not an integer"
        )));
    }
    Ok((total / order) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::symmetric::lr_coefficient;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(centralizer_order(&p("[1,1,1]")), 6);
        assert_eq!(centralizer_order(&p("[2,1]")), 2);
        assert_eq!(centralizer_order(&p("[3]")), 3);
        assert_eq!(centralizer_order(&p("[2,2]")), 8);
        assert_eq!(centralizer_order(&p("[]")), 1);
    }

    #[test]
    fn class_sizes_sum_to_the_group_order() {
        for n in 1..=8 {
            let total: u128 = partitions_of(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n as u128));
        }
    }

    #[test]
    fn class_sizes_match_direct_counting() {
        for n in 2..=5 {
            let group = FiniteGroup::symmetric(n).unwrap();
            for class in partitions_of(n) {
                let counted = group
                    .elements()
                    .iter()
                    .filter(|g| g.cycle_type() == class.parts())
                    .count() as u128;
                assert_eq!(counted, class_size(&class), "class {class} in S_{n}");
            }
        }
    }

    #[test]
    fn character_route_agrees_with_tableau_counting() {
        for n in 2..=6 {
            for nu in partitions_of(n) {
                for k in 0..=n {
                    for lambda in partitions_of(k) {
                        for mu in partitions_of(n - k) {
                            let combinatorial = lr_coefficient(&lambda, &mu, &nu).unwrap();
                            let character = lr_via_characters(&lambda, &mu, &nu).unwrap();
                            assert_eq!(
                                combinatorial as i64, character,
                                "coefficient of ({lambda},{mu}) in {nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn size_mismatch_is_rejected() {
        assert!(lr_via_characters(&p("[2]"), &p("[1]"), &p("[2]")).is_err());
    }
}

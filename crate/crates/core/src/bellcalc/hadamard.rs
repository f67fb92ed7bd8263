//! The Hadamard exponential product of two free exponentials, computed
//! three ways: coefficientwise, summed over pairs of set partitions, and
//! grouped by diagram with multiplicities.
//!
//! Convention: black spots (rows) come from the first partition and carry
//! the `L` variables; white spots (columns) come from the second and carry
//! the `V` variables. So a diagram `d` contributes `L^β(d) V^α(d)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::egf::{egf_exp, hadamard, EgfSeries, Poly};
use super::partition::{for_each_set_partition, set_partitions_bounded, PartitionType};
use crate::bases::{diag_canonical, diagram_from_partitions, spot_types, Diagram, Monomial, SeriesVar};
use crate::error::{Error, Result};
use crate::linalg::LinComb;
use crate::scalar::Rational;

/// Default bound on the order of the partition-pair and diagram routes.
pub const DEFAULT_HADAMARD_BOUND: usize = 7;

/// `∏ₖ Xₖ^{αₖ}` for a block-size multi-index.
pub fn type_monomial(t: &PartitionType, var: fn(usize) -> SeriesVar) -> Monomial<SeriesVar> {
    Monomial::from_exponents(t.iter().map(|(&k, &m)| (var(k), m as u32)))
}

fn check_bound(order: usize, bound: usize) -> Result<()> {
    if order > bound {
        return Err(Error::SizeLimit {
            what: format!("order {order}"),
            bound,
        });
    }
    Ok(())
}

/// `exp(Σ Xₙ zⁿ/n!)` with symbolic `Xₙ`.
pub fn free_exponential(order: usize, var: fn(usize) -> SeriesVar) -> EgfSeries<Poly<SeriesVar>> {
    let cumulants = EgfSeries::from_fn(order, |n| {
        if n == 0 {
            Poly::zero()
        } else {
            LinComb::basis(Monomial::var(var(n)))
        }
    });
    egf_exp(&cumulants).expect("constant term is zero")
}

/// `ℋ(F, G)` for `F = exp(Σ Lₙ zⁿ/n!)`, `G = exp(Σ Vₙ zⁿ/n!)`, taking the
/// product coefficient by coefficient.
pub fn hadamard_via_coefficients(order: usize) -> EgfSeries<Poly<SeriesVar>> {
    let f = free_exponential(order, SeriesVar::L);
    let g = free_exponential(order, SeriesVar::V);
    hadamard(&f, &g).expect("same order")
}

pub fn hadamard_via_partitions(order: usize) -> Result<EgfSeries<Poly<SeriesVar>>> {
    hadamard_via_partitions_bounded(order, DEFAULT_HADAMARD_BOUND)
}

/// Coefficient `n` is `Σ_{P1,P2 ∈ UPₙ} L^{Type(P1)} V^{Type(P2)}`.
pub fn hadamard_via_partitions_bounded(order: usize, bound: usize) -> Result<EgfSeries<Poly<SeriesVar>>> {
    check_bound(order, bound)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let parts = set_partitions_bounded(n, bound)?;
        let types: Vec<PartitionType> = parts.iter().map(|p| p.partition_type()).collect();
        let mut c = Poly::zero();
        for t1 in &types {
            let l = type_monomial(t1, SeriesVar::L);
            for t2 in &types {
                c.add_term(l.mul(&type_monomial(t2, SeriesVar::V)), Rational::from_integer(1.into()));
            }
        }
        coeffs.push(c);
    }
    Ok(EgfSeries::new(coeffs))
}

/// `mult(d)` for every diagram with `n` edges, by enumerating `UPₙ × UPₙ`.
pub fn diagram_census(n: usize) -> Result<BTreeMap<Diagram, u64>> {
    diagram_census_bounded(n, DEFAULT_HADAMARD_BOUND)
}

pub fn diagram_census_bounded(n: usize, bound: usize) -> Result<BTreeMap<Diagram, u64>> {
    check_bound(n, bound)?;
    let parts = set_partitions_bounded(n, bound)?;
    let mut census = BTreeMap::new();
    for p1 in &parts {
        for p2 in &parts {
            let d = diag_canonical(&diagram_from_partitions(p1, p2)?)?;
            *census.entry(d).or_insert(0) += 1;
        }
    }
    Ok(census)
}

/// Number of ordered pairs of partitions of `[1..n]` whose incidence
/// diagram is `d`.
pub fn mult_of_diagram(d: &Diagram, n: usize) -> Result<u64> {
    check_bound(n, DEFAULT_HADAMARD_BOUND)?;
    if d.degree() != n {
        return Ok(0);
    }
    let mut count = 0u64;
    let mut err = None;
    for_each_set_partition(n, |p1| {
        for_each_set_partition(n, |p2| {
            match diagram_from_partitions(p1, p2).and_then(|l| diag_canonical(&l)) {
                Ok(c) if &c == d => count += 1,
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

pub fn hadamard_via_diagrams(order: usize) -> Result<EgfSeries<Poly<SeriesVar>>> {
    hadamard_via_diagrams_bounded(order, DEFAULT_HADAMARD_BOUND)
}

/// Coefficient `n` is `Σ_{|d|=n} mult(d) L^{β(d)} V^{α(d)}`.
pub fn hadamard_via_diagrams_bounded(order: usize, bound: usize) -> Result<EgfSeries<Poly<SeriesVar>>> {
    check_bound(order, bound)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut c = Poly::zero();
        for (d, mult) in diagram_census_bounded(n, bound)? {
            let (alpha, beta) = spot_types(d.canon());
            let m = type_monomial(&beta, SeriesVar::L).mul(&type_monomial(&alpha, SeriesVar::V));
            c.add_term(m, Rational::from_integer((mult as i64).into()));
        }
        coeffs.push(c);
    }
    Ok(EgfSeries::new(coeffs))
}

/// Specializes `Lₙ`, `Vₙ` (and parameters) to rationals.
pub fn specialize<F: Fn(&SeriesVar) -> Rational>(
    s: &EgfSeries<Poly<SeriesVar>>,
    value: F,
) -> EgfSeries<Rational> {
    s.map(|p| super::egf::poly_eval(p, &value))
}

/// Total multiplicity `Σ_{|d|=n} mult(d)`.
pub fn total_multiplicity(census: &BTreeMap<Diagram, u64>) -> u64 {
    census.values().sum()
}

/// `Σ` of the coefficients of a polynomial, i.e. its value at all-ones.
pub fn coefficient_sum(p: &Poly<SeriesVar>) -> Rational {
    p.iter().fold(Rational::zero(), |acc, (_, c)| acc + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::LabelledDiagram;
    use crate::bellcalc::egf::{egf_exp, hadamard};
    use crate::bellcalc::numbers::bell;
    use crate::scalar::{int, rat};

    fn diag(s: &str) -> Diagram {
        diag_canonical(&s.parse::<LabelledDiagram>().unwrap()).unwrap()
    }

    #[test]
    fn low_order_terms() {
        let p = hadamard_via_partitions(2).unwrap();
        let l = |k| Monomial::var(SeriesVar::L(k));
        let v = |k| Monomial::var(SeriesVar::V(k));
        assert_eq!(p.coeff(1), &LinComb::basis(l(1).mul(&v(1))));
        let l1sq = Monomial::power(SeriesVar::L(1), 2);
        let v1sq = Monomial::power(SeriesVar::V(1), 2);
        let expected: Poly<SeriesVar> = [
            l(2).mul(&v(2)),
            l(2).mul(&v1sq),
            l1sq.mul(&v(2)),
            l1sq.mul(&v1sq),
        ]
        .into_iter()
        .map(|m| (m, int(1)))
        .collect();
        assert_eq!(p.coeff(2), &expected);
    }

    #[test]
    fn multiplicities_of_small_diagrams() {
        assert_eq!(mult_of_diagram(&diag("[[1]]"), 1).unwrap(), 1);
        assert_eq!(mult_of_diagram(&diag("[[2]]"), 2).unwrap(), 1);
        assert_eq!(mult_of_diagram(&diag("[[1],[1]]"), 2).unwrap(), 1);
        assert_eq!(mult_of_diagram(&diag("[[1,1]]"), 2).unwrap(), 1);
        // {1}{2} against itself is the only pair giving two crossed singletons
        assert_eq!(mult_of_diagram(&diag("[[1,0],[0,1]]"), 2).unwrap(), 1);
        assert_eq!(mult_of_diagram(&diag("[[1]]"), 2).unwrap(), 0);
        let census = diagram_census(2).unwrap();
        assert_eq!(census.len(), 4);
        assert_eq!(total_multiplicity(&census), 4);
    }

    #[test]
    fn total_multiplicity_is_bell_squared() {
        for n in 0..=5 {
            let b = bell(n);
            assert_eq!(num_bigint::BigUint::from(total_multiplicity(&diagram_census(n).unwrap())), &b * &b);
        }
    }

    #[test]
    fn three_routes_agree() {
        let a = hadamard_via_coefficients(5);
        let b = hadamard_via_partitions(5).unwrap();
        let c = hadamard_via_diagrams(5).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
    }

    #[test]
    fn specialization_matches_scalar_route() {
        let lv = |v: &SeriesVar| match v {
            SeriesVar::L(k) => rat(*k as i64 + 1, 3),
            SeriesVar::V(k) => rat(2, *k as i64 + 1) - int(1),
            SeriesVar::Param(_) => int(0),
        };
        let sym = specialize(&hadamard_via_partitions(5).unwrap(), lv);
        let f = egf_exp(&EgfSeries::from_fn(5, |n| if n == 0 { int(0) } else { lv(&SeriesVar::L(n)) })).unwrap();
        let g = egf_exp(&EgfSeries::from_fn(5, |n| if n == 0 { int(0) } else { lv(&SeriesVar::V(n)) })).unwrap();
        assert_eq!(sym, hadamard(&f, &g).unwrap());
    }

    #[test]
    fn size_limits() {
        assert!(matches!(hadamard_via_diagrams(8), Err(Error::SizeLimit { .. })));
        assert!(matches!(hadamard_via_partitions_bounded(4, 3), Err(Error::SizeLimit { .. })));
    }
}

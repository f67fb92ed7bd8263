use hopfcalc_core::bases::{Alphabet, CommutationGraph, FiniteGroup, Word};
use hopfcalc_core::hopf::{
    antipode, antipode_identity_holds, AntipodeCache, Bialgebra, Diag, FreeConcatUnshuffle,
    FreeGrouplike, GroupAlgebra, LDiag, PolyBinomial, ShuffleDeconcat, TraceUnshuffle,
};
use hopfcalc_core::linalg::{convolve, LinComb, LinMap};
use hopfcalc_core::scalar::{int, rat};
use hopfcalc_core::Error;

fn ab() -> Alphabet {
    Alphabet::new("ab".chars())
}

/// Antipode identity on every corpus element and `S(xy) = S(y)S(x)` on
/// every pair.
fn check_hopf<A: Bialgebra>(alg: &A, max_degree: usize) {
    let corpus = alg.corpus(max_degree);
    let mut cache = AntipodeCache::new(alg);
    let images: Vec<_> = corpus.iter().map(|x| cache.basis(x).unwrap()).collect();
    for x in &corpus {
        let mut local = AntipodeCache::new(alg);
        assert!(
            antipode_identity_holds(alg, x, |b| local.basis(b).unwrap()),
            "{}: identity fails on {x:?}",
            alg.name()
        );
    }
    let max = corpus.iter().filter_map(|x| alg.degree(x)).max();
    for (i, x) in corpus.iter().enumerate() {
        for (j, y) in corpus.iter().enumerate() {
            if let (Some(m), Some(dx), Some(dy)) = (max, alg.degree(x), alg.degree(y)) {
                if dx + dy > m {
                    continue;
                }
            }
            let lhs = cache.apply(&alg.product_basis(x, y)).unwrap();
            let rhs = alg.product(&images[j], &images[i]);
            assert_eq!(lhs, rhs, "{}: S({x:?}·{y:?})", alg.name());
        }
    }
}

#[test]
fn every_hopf_instance_satisfies_the_identity() {
    check_hopf(&FreeConcatUnshuffle::new(ab(), int(0)), 4);
    for q in [int(0), int(1), rat(1, 2)] {
        check_hopf(&ShuffleDeconcat::new(ab(), q), 4);
    }
    check_hopf(&PolyBinomial { alphabet: ab() }, 4);
    let graph = CommutationGraph::new([('a', 'c')]).unwrap();
    check_hopf(&TraceUnshuffle::new(Alphabet::new("abc".chars()), graph), 4);
    for g in ["C3", "S3"] {
        check_hopf(&GroupAlgebra::new(FiniteGroup::by_name(g).unwrap()), 0);
    }
    check_hopf(&LDiag, 4);
    check_hopf(&Diag, 4);
}

#[test]
fn series_agrees_with_signed_reversal() {
    let alg = FreeConcatUnshuffle::new(ab(), int(0));
    let mut cache = AntipodeCache::new(&alg);
    for w in ab().words_up_to(6) {
        let sign = if w.len() % 2 == 0 { int(1) } else { int(-1) };
        assert_eq!(cache.basis(&w).unwrap(), LinComb::term(w.reversed(), sign), "{w}");
    }
}

#[test]
fn missing_antipodes() {
    let gl = FreeGrouplike { alphabet: Alphabet::new("a".chars()) };
    let a = LinComb::basis(Word::from("a"));
    assert!(matches!(antipode(&gl, &a), Err(Error::NoAntipode(_))));
    for q in [int(1), rat(1, 2), rat(-3, 4)] {
        let alg = FreeConcatUnshuffle::new(ab(), q);
        assert!(matches!(antipode(&alg, &a), Err(Error::NoAntipode(_))));
    }
}

#[test]
fn antipode_is_the_convolution_inverse_of_identity() {
    let alg = FreeConcatUnshuffle::new(ab(), int(0));
    let id = LinMap::identity();
    let s = {
        let alg = alg.clone();
        LinMap::new(move |w: &Word| antipode(&alg, &LinComb::basis(w.clone())).unwrap())
    };
    let eta_eps = {
        let alg = alg.clone();
        LinMap::new(move |w: &Word| alg.one().scale(&alg.counit_basis(w)))
    };
    let left = convolve(&id, &s, &alg);
    let right = convolve(&s, &id, &alg);
    for w in ab().words_up_to(4) {
        assert_eq!(left.on_basis(&w), eta_eps.on_basis(&w));
        assert_eq!(right.on_basis(&w), eta_eps.on_basis(&w));
    }
    let x = LinComb::basis(Word::from("ab"));
    assert_eq!(left.apply(&x), LinComb::zero());
}

#[test]
fn perturbed_antipodes_are_rejected() {
    // S + t·P for a few rank-one perturbations P: none is a convolution inverse
    let alg = FreeConcatUnshuffle::new(ab(), int(0));
    let words = ab().words_up_to(3);
    let id = LinMap::identity();
    for (k, target) in words.iter().enumerate() {
        for t in [int(1), rat(-1, 2), rat(7, 3)] {
            let image = words[(k * 5 + 3) % words.len()].clone();
            let (alg2, target2, t2) = (alg.clone(), target.clone(), t.clone());
            let perturbed = LinMap::new(move |w: &Word| {
                let mut s = antipode(&alg2, &LinComb::basis(w.clone())).unwrap();
                if *w == target2 {
                    s.add_term(image.clone(), t2.clone());
                }
                s
            });
            let conv = convolve(&perturbed, &id, &alg);
            let fails = words
                .iter()
                .any(|w| conv.on_basis(w) != alg.one().scale(&alg.counit_basis(w)));
            assert!(fails, "perturbation at {target} still inverts Id");
        }
    }
}

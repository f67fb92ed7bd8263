use hopfcalc_core::bases::Alphabet;
use hopfcalc_core::hopf::{duality_check, duality_sides, infiltration, unshuffle_q};
use hopfcalc_core::scalar::{int, rat};
use hopfcalc_core::Tensor;

#[test]
fn pairing_is_exhaustively_dual() {
    let words = Alphabet::new("ab".chars()).words_up_to(4);
    for q in [int(0), int(1), rat(1, 2)] {
        let coproducts: Vec<_> = words.iter().map(|w| unshuffle_q(w, &q)).collect();
        let mut checked = 0;
        for u in &words {
            for v in &words {
                let product = infiltration(u, v, &q);
                let pair = Tensor(u.clone(), v.clone());
                for (w, delta) in words.iter().zip(&coproducts) {
                    assert_eq!(delta.coeff(&pair), product.coeff(w), "u={u} v={v} w={w} q={q}");
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 31 * 31 * 31);
    }
    assert_eq!(duality_sides(&"a".into(), &"a".into(), &"aa".into(), &int(0)), (int(2), int(2)));
}

#[test]
fn whole_expansions_match() {
    // ⟨w, u ↑ v⟩ over all w is the coefficient list of Δ_q restricted to u⊗v
    let words = Alphabet::new("ab".chars()).words_up_to(3);
    let q = rat(2, 5);
    for u in &words {
        for v in &words {
            let product = infiltration(u, v, &q);
            for (w, c) in &product {
                let d = unshuffle_q(w, &q);
                assert_eq!(&d.coeff(&Tensor(u.clone(), v.clone())), c);
            }
        }
    }
    assert!(duality_check(&"a".into(), &"a".into(), &"a".into(), &rat(5, 3)));
}

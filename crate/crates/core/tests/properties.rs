use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use qeta::compositions::comp_of_subset;
use qeta::fshuffle::{sharp, sharp_explicit, FreeWordElement, SharpParams};
use qeta::json::{document_to_json, parse_document, Document, Element};
use qeta::nsym::{h_product, pairing};
use qeta::oracle::oracle_product;
use qeta::qsym::{antipode, coproduct, from_eta, product, to_eta};
use qeta::{Basis, Composition, IntPolynomial, LinComb, NSymElement, QSymElement, Scalar};

fn poly(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-5i64..=5, 0..=max_deg + 1).prop_map(|c| IntPolynomial::from_i64s(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(4), nonzero_poly(4)).prop_map(|(n, d)| Scalar::from_parts(n, d).unwrap())
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

fn comp(max_len: usize, max_part: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|v| Composition::new(v).unwrap())
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (
        poly(2),
        prop_oneof![Just(vec![1i64]), Just(vec![1, 1]), Just(vec![-1, 1])],
    )
        .prop_map(|(n, d)| Scalar::from_parts(n, IntPolynomial::from_i64s(&d)).unwrap())
}

fn lincomb(max_size: u32) -> impl Strategy<Value = LinComb<Composition>> {
    prop::collection::vec((comp(3, max_size), small_scalar()), 0..=3).prop_map(move |terms| {
        let mut lc = LinComb::new();
        for (a, x) in terms {
            if a.size() as u32 <= max_size {
                lc.add_term(a, x);
            }
        }
        lc
    })
}

fn qsym(basis: Basis) -> impl Strategy<Value = QSymElement> {
    lincomb(4).prop_map(move |lc| QSymElement::new(basis, lc).unwrap())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, Scalar::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
            prop_assert_eq!(y.checked_div(&x).unwrap(), &y * &x.inv().unwrap());
        }
    }

    #[test]
    fn normal_form_is_unique(n in poly(3), d in nonzero_poly(3), k in nonzero_poly(2)) {
        let plain = Scalar::from_parts(n.clone(), d.clone()).unwrap();
        let padded = Scalar::from_parts(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&plain, &padded);
        prop_assert_eq!((&plain - &padded).is_zero(), true);
        prop_assert!(plain.denom().leading().unwrap() > &BigInt::from(0));
    }

    #[test]
    fn reciprocal_substitution_is_an_involution(x in nonzero_scalar()) {
        prop_assert_eq!(x.substitute_reciprocal().substitute_reciprocal(), x);
    }

    #[test]
    fn evaluation_is_a_ring_map(x in scalar(), y in scalar(), q0 in rational()) {
        if let (Ok(a), Ok(b)) = (x.evaluate(&q0), y.evaluate(&q0)) {
            prop_assert_eq!((&x * &y).evaluate(&q0).unwrap(), &a * &b);
            prop_assert_eq!((&x + &y).evaluate(&q0).unwrap(), &a + &b);
        }
    }

    #[test]
    fn composition_laws(a in comp(6, 4), b in comp(4, 3)) {
        let n = a.size();
        prop_assert_eq!(comp_of_subset(&a.descent_set()), a.clone());
        prop_assert_eq!(a.len(), a.descent_set().len() + usize::from(n != 0));
        prop_assert_eq!(a.reverse().reverse(), a.clone());
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.omega().omega(), a.clone());
        if n >= 1 {
            prop_assert_eq!(a.complement().len() + a.len(), n + 1);
        }
        prop_assert_eq!(a.reverse().descent_set(), a.descent_set().reverse());
        let ab = a.concat(&b);
        prop_assert_eq!(ab.size(), n + b.size());
        let cut: Vec<usize> = ab.descent_set().members().iter().copied().filter(|&x| x < n).collect();
        prop_assert_eq!(cut, a.descent_set().members().to_vec());
        prop_assert_eq!(a.coarsenings().len(), if n == 0 { 1 } else { 1 << (a.len() - 1) });
    }

    #[test]
    fn eta_conversion_round_trips(f in qsym(Basis::M)) {
        let g = to_eta(&f).unwrap();
        prop_assert_eq!(from_eta(&g).unwrap(), f.clone());
        prop_assert_eq!(f.convert(Basis::L).unwrap().to_m(), f);
    }

    #[test]
    fn product_is_commutative_and_matches_oracle(f in qsym(Basis::Eta), g in qsym(Basis::M)) {
        let fg = product(&f, &g);
        prop_assert!(fg.equals(&product(&g, &f)));
        let d = (f.degree().unwrap_or(0) + g.degree().unwrap_or(0)).max(1);
        prop_assert!(fg.equals(&oracle_product(&f, &g, d).unwrap()));
    }

    #[test]
    fn coproduct_is_multiplicative(f in qsym(Basis::Eta), g in qsym(Basis::Eta)) {
        let lhs = coproduct(&product(&f, &g));
        let mul = |x: &Composition, y: &Composition| {
            product(&QSymElement::basis_element(Basis::Eta, x).unwrap(), &QSymElement::basis_element(Basis::Eta, y).unwrap())
                .convert(Basis::Eta)
                .unwrap()
                .terms()
                .clone()
        };
        let rhs = coproduct(&f).mul_legwise(&coproduct(&g), mul, mul).unwrap();
        let lhs = qeta::qsym::tensor_to_m(&lhs);
        let rhs = qeta::qsym::tensor_to_m(&rhs);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_is_an_involution(f in qsym(Basis::Eta)) {
        prop_assert!(antipode(&antipode(&f)).equals(&f));
    }

    #[test]
    fn pairing_turns_products_into_coproducts(a in comp(2, 2), b in comp(2, 2), f in qsym(Basis::Eta)) {
        let ha = NSymElement::h(&a);
        let hb = NSymElement::h(&b);
        let lhs = pairing(&h_product(&ha, &hb), &f);
        let mut rhs = Scalar::zero();
        for ((l, r), x) in qeta::qsym::tensor_to_m(&coproduct(&f)).terms().iter() {
            if l == &a && r == &b {
                rhs += x;
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sharp_is_commutative_with_explicit_form(d in comp(3, 2), e in comp(3, 2), a in -3i64..=3, b in -3i64..=3) {
        let p = SharpParams::new(Scalar::from(a), Scalar::from(b));
        let de = sharp(&FreeWordElement::word(&d), &FreeWordElement::word(&e), &p);
        prop_assert_eq!(&de, &sharp(&FreeWordElement::word(&e), &FreeWordElement::word(&d), &p));
        prop_assert_eq!(de, sharp_explicit(&d, &e, &p));
    }

    #[test]
    fn json_round_trip(f in qsym(Basis::Eta), w in lincomb(4)) {
        for doc in [
            Document::Element(Element::QSym(f.clone())),
            Document::Element(Element::Free(FreeWordElement::new(w.clone()))),
            Document::Element(Element::NSym(NSymElement::new(Basis::EtaStar, w.clone()).unwrap())),
            Document::Tensor(coproduct(&f)),
        ] {
            let text = document_to_json(&doc).to_string();
            prop_assert_eq!(parse_document(&text).unwrap(), doc);
        }
    }
}

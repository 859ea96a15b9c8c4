use proptest::prelude::*;
use rehard::automata::{compile_extended, complement_dfa, determinize, dfa_to_re, minimize, product, re_to_nfa, BoolOp};
use rehard::regex::{print_with, size_of, Style};
use rehard::{derivative, desugar_count, enumerate_language, equivalent_upto, matches, nullable, parse, print, Regex, Word};

fn regex(ops: bool) -> impl Strategy<Value = Regex> {
    let leaf = prop_oneof![
        Just(Regex::EmptySet),
        Just(Regex::Epsilon),
        Just(Regex::Sym(false)),
        Just(Regex::Sym(true)),
    ];
    leaf.prop_recursive(4, 16, 2, move |inner| {
        let plain = prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::union(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::concat(a, b)),
            inner.clone().prop_map(Regex::star),
        ];
        if ops {
            prop_oneof![
                3 => plain,
                1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::inter(a, b)),
                1 => inner.clone().prop_map(Regex::compl),
                1 => (inner, 0u64..4).prop_map(|(a, k)| Regex::count(a, k)),
            ]
            .boxed()
        } else {
            plain.boxed()
        }
    })
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(any::<bool>(), 0..=max).prop_map(Word::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_parse_round_trip(r in regex(true)) {
        for style in [Style::Minimal, Style::Grouped, Style::Full] {
            prop_assert_eq!(parse(&print_with(&r, style)).unwrap(), r.clone());
        }
    }

    #[test]
    fn size_is_compositional(a in regex(true), b in regex(true), counting in any::<bool>()) {
        let (sa, sb) = (size_of(&a, counting), size_of(&b, counting));
        prop_assert_eq!(size_of(&Regex::union(a.clone(), b.clone()), counting), sa + sb + 1);
        prop_assert_eq!(size_of(&Regex::inter(a.clone(), b.clone()), counting), sa + sb + 1);
        prop_assert_eq!(size_of(&Regex::concat(a.clone(), b.clone()), counting), sa + sb);
        prop_assert_eq!(size_of(&Regex::star(a.clone()), counting), sa + 1);
        prop_assert_eq!(size_of(&Regex::compl(b), counting), sb + 1);
    }

    #[test]
    fn desugaring_keeps_the_language(r in regex(true)) {
        let d = desugar_count(&r);
        prop_assert!(!d.has_count());
        prop_assert!(equivalent_upto(&r, &d, 6).unwrap().is_equivalent());
    }

    #[test]
    fn de_morgan(a in regex(true), b in regex(true), w in word(7)) {
        let lhs = Regex::compl(Regex::union(a.clone(), b.clone()));
        let rhs = Regex::inter(Regex::compl(a), Regex::compl(b));
        prop_assert_eq!(matches(&lhs, &w), matches(&rhs, &w));
    }

    #[test]
    fn derivative_identity(r in regex(true), bit in any::<bool>(), w in word(7)) {
        let mut bw = Word::new(vec![bit]);
        bw.extend_from(&w);
        prop_assert_eq!(matches(&r, &bw), matches(&derivative(&r, bit), &w));
        prop_assert_eq!(nullable(&r), matches(&r, &Word::empty()));
    }

    #[test]
    fn complement_flips_membership(r in regex(true), w in word(7)) {
        prop_assert_ne!(matches(&r, &w), matches(&Regex::compl(r.clone()), &w));
    }

    #[test]
    fn matcher_agrees_with_enumeration(r in regex(true)) {
        let lang = enumerate_language(&r, 6).unwrap();
        for w in Word::all_up_to(6) {
            prop_assert_eq!(matches(&r, &w), lang.contains(&w), "{} on {}", print(&r), w);
        }
    }

    #[test]
    fn automata_pipeline_preserves_language(r in regex(false)) {
        let d = minimize(&determinize(&re_to_nfa(&r).unwrap()).unwrap());
        for w in Word::all_up_to(8) {
            prop_assert_eq!(d.accepts(&w), matches(&r, &w));
        }
        let back = dfa_to_re(&d);
        prop_assert!(back.is_plain());
        prop_assert!(equivalent_upto(&r, &back, 6).unwrap().is_equivalent());
    }

    #[test]
    fn product_and_complement_set_identities(a in regex(true), b in regex(true), w in word(8)) {
        let (da, db) = (compile_extended(&a).unwrap(), compile_extended(&b).unwrap());
        prop_assert_eq!(product(&da, &db, BoolOp::And).accepts(&w), da.accepts(&w) && db.accepts(&w));
        prop_assert_eq!(product(&da, &db, BoolOp::Or).accepts(&w), da.accepts(&w) || db.accepts(&w));
        prop_assert_eq!(complement_dfa(&da).accepts(&w), !da.accepts(&w));
        prop_assert_eq!(da.accepts(&w), matches(&a, &w));
    }

    #[test]
    fn minimization_is_canonical(r in regex(true)) {
        let d = compile_extended(&r).unwrap();
        let m = minimize(&d);
        prop_assert_eq!(minimize(&m), m.clone());
        prop_assert!(m.state_count() <= d.state_count());
        let via_re = minimize(&compile_extended(&dfa_to_re(&m)).unwrap());
        prop_assert_eq!(via_re, m);
    }

    #[test]
    fn word_text_round_trip(w in word(40)) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }
}

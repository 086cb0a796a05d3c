mod common;

use chipchain::cli::{convert, DivisorPayload, Document, Kind, Payload};
use chipchain::{
    dual_reduce, enumerate, phi, phi_preimage, rank, reflect_divisor, reflect_raw, ChainOfLoops, DivisorSeq,
    LatticePath, Rational, RectTableau,
};
use common::shapes_up_to;
use proptest::prelude::*;

fn tableau() -> impl Strategy<Value = RectTableau> {
    (prop::sample::select(shapes_up_to(12)), any::<prop::sample::Index>()).prop_map(|((m, n), idx)| {
        let all: Vec<RectTableau> = enumerate(m, n, 16).unwrap().collect();
        all[idx.index(all.len())].clone()
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (1i64..40, 1i64..6).prop_map(|(a, b)| Rational::new(a, b).unwrap())
}

fn chain(genus: usize) -> impl Strategy<Value = ChainOfLoops> {
    prop::collection::vec((rational(), rational()), genus).prop_map(|loops| ChainOfLoops::new(loops).unwrap())
}

/// Tableau paired with a generic chain of matching genus with random loop lengths.
fn tableau_on_generic_chain() -> impl Strategy<Value = (RectTableau, ChainOfLoops)> {
    tableau()
        .prop_flat_map(|t| {
            let g = t.size() as i64;
            let loops = prop::collection::vec((2 * g..6 * g + 8, 1i64..4, 1i64..3), t.size()).prop_map(|v| {
                v.into_iter()
                    .map(|(a, b, c)| (Rational::new(a * c + 1, b * c).unwrap(), Rational::new(1, c).unwrap()))
                    .collect::<Vec<_>>()
            });
            (Just(t), loops)
        })
        .prop_filter_map("generic", |(t, loops)| {
            let graph = ChainOfLoops::new(loops).unwrap();
            graph.is_generic().then_some((t, graph))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn evacuation_and_transpose_are_involutions(t in tableau()) {
        prop_assert_eq!(t.evacuate().evacuate(), t.clone());
        prop_assert_eq!(t.transpose().transpose(), t.clone());
        prop_assert_eq!(t.evacuate().transpose(), t.transpose().evacuate());
    }

    #[test]
    fn path_bijection_round_trips(t in tableau()) {
        let p = LatticePath::from_tableau(&t);
        prop_assert!(p.is_non_lingering());
        prop_assert_eq!(p.to_tableau().unwrap(), t);
    }

    #[test]
    fn rationals_normalize(a in -50i64..50, b in 1i64..20, k in 1i64..9) {
        let x = Rational::new(a, b).unwrap();
        prop_assert_eq!(Rational::new(a * k, b * k).unwrap(), x.clone());
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), x);
    }

    #[test]
    fn reflection_preserves_genericity(graph in (1usize..8).prop_flat_map(chain)) {
        let reflected = graph.reflect();
        prop_assert_eq!(reflected.is_generic(), graph.is_generic());
        prop_assert_eq!(reflected.reflect(), graph);
    }

    #[test]
    fn double_reflection_is_identity(
        graph in (1usize..6).prop_flat_map(chain),
        d0 in -2i64..5,
        picks in prop::collection::vec((0u8..3, 1i64..30, 1i64..4), 6),
    ) {
        let positions = graph
            .loops()
            .iter()
            .zip(&picks)
            .map(|(lp, &(kind, a, b))| match kind {
                0 => Rational::zero(),
                _ => Rational::new(a, b).unwrap().rem_euclid(&lp.circumference()),
            })
            .collect();
        let c = DivisorSeq::new(graph, d0, positions).unwrap();
        let once = reflect_raw(&c).unwrap();
        prop_assert_eq!(once.divisor.degree(), c.degree());
        prop_assert_eq!(reflect_raw(&once.divisor).unwrap().divisor, c);
    }

    #[test]
    fn correspondences_hold_on_random_generic_chains((t, graph) in tableau_on_generic_chain()) {
        let c = phi(&t, &graph).unwrap();
        prop_assert_eq!(rank(&c.to_raw()).unwrap(), t.num_cols() as i64 - 1);
        prop_assert_eq!(phi_preimage(&c).unwrap(), t.clone());
        prop_assert_eq!(reflect_divisor(&c).unwrap().divisor, phi(&t.evacuate(), &graph.reflect()).unwrap());
        prop_assert_eq!(dual_reduce(&c).unwrap(), phi(&t.transpose(), &graph).unwrap());
    }

    #[test]
    fn documents_round_trip(t in tableau()) {
        let docs = [
            Document::from(Payload::Tableau(t.clone())),
            Document::from(Payload::Path(LatticePath::from_tableau(&t))),
            convert(&Document::from(Payload::Tableau(t.clone())), Kind::Divisor, None).unwrap(),
        ];
        for doc in docs {
            let json = doc.to_json();
            let back = Document::parse(&json).unwrap();
            prop_assert_eq!(back.to_json(), json);
            prop_assert_eq!(back, doc);
        }
    }

    #[test]
    fn raw_divisor_documents_round_trip(graph in (1usize..5).prop_flat_map(chain), d0 in -1i64..4, a in 0i64..20) {
        let positions = graph
            .loops()
            .iter()
            .map(|lp| Rational::new(a, 3).unwrap().rem_euclid(&lp.circumference()))
            .collect();
        let doc = Document::from(Payload::Divisor(DivisorPayload::from_raw(DivisorSeq::new(graph, d0, positions).unwrap())));
        prop_assert_eq!(Document::parse(&doc.to_json()).unwrap(), doc);
    }
}

use proptest::prelude::*;
use sierpinski_fvs::addressing::{format_vertex, parse_vertex, Family};
use sierpinski_fvs::generators::generate;
use sierpinski_fvs::LabeledGraph;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::S),
        Just(Family::Plus),
        Just(Family::PlusPlus),
        Just(Family::Hat)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_label_parses_back(f in family(), p in 2u32..13, n in 1usize..4) {
        prop_assume!((p as u64).pow(n as u32 + 1) < 5_000);
        let g = generate(f, p, n).unwrap();
        for label in g.labels() {
            let v = parse_vertex(label, f, p, n).unwrap();
            prop_assert_eq!(&format_vertex(&v, p), label);
        }
    }

    #[test]
    fn edge_list_round_trip(f in family(), p in 2u32..6, n in 1usize..4) {
        let g = generate(f, p, n).unwrap();
        let text = g.export_edgelist();
        let back = LabeledGraph::parse_edgelist(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.export_edgelist(), text);
    }

    #[test]
    fn garbage_is_rejected_not_panicking(label in "\\PC{0,8}", f in family(), p in 2u32..12, n in 0usize..4) {
        if let Ok(v) = parse_vertex(&label, f, p, n) {
            // anything accepted must be canonical
            prop_assert_eq!(format_vertex(&v, p), label);
        }
    }
}

#[test]
fn out_of_range_symbols_are_rejected() {
    assert!(parse_vertex("13", Family::S, 3, 2).is_err());
    assert!(parse_vertex("0:{0,3}", Family::Hat, 3, 2).is_err());
    assert!(parse_vertex("{1,1}", Family::Hat, 3, 2).is_err());
    assert!(parse_vertex("^3", Family::Hat, 3, 2).is_err());
    assert!(parse_vertex("4:1", Family::PlusPlus, 3, 2).is_err());
}

#[test]
fn isolated_vertices_survive_edge_list() {
    let g = generate(Family::S, 1, 0).unwrap();
    let text = g.export_edgelist();
    assert_eq!(text, "ε\n");
    assert_eq!(LabeledGraph::parse_edgelist(&text).unwrap(), g);
}

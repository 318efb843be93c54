use cordial::family::{random_graph, seeded_rng};
use cordial::io::{parse_graph6, write_graph6};
use cordial::{closed_form_complete, generate, solve_exact, FamilySpec, Graph, SolveOptions};
use petgraph::graph::UnGraph;
use petgraph::graph6::{FromGraph6, ToGraph6};

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::with_capacity(g.n(), g.m());
    for _ in 0..g.n() {
        p.add_node(());
    }
    for (u, v) in g.edges() {
        p.add_edge((u as u32).into(), (v as u32).into(), ());
    }
    p
}

fn from_petgraph(p: &UnGraph<(), ()>) -> Graph {
    Graph::from_edges(
        p.node_count(),
        p.edge_indices().map(|e| {
            let (a, b) = p.edge_endpoints(e).unwrap();
            (a.index(), b.index())
        }),
    )
    .unwrap()
}

#[test]
fn codec_agrees_with_petgraph() {
    let mut rng = seeded_rng(5);
    for i in 0..300 {
        let g = random_graph(i % 70, 0.3, &mut rng).unwrap();
        let ours = String::from_utf8(write_graph6(&g)).unwrap();
        assert_eq!(ours, to_petgraph(&g).graph6_string(), "n={}", g.n());
        let theirs = UnGraph::<(), ()>::from_graph6_string(ours.clone());
        assert_eq!(from_petgraph(&theirs), g);
    }
}

#[test]
fn known_encodings() {
    // Encodings produced by an independent graph6 implementation.
    let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
    assert_eq!(write_graph6(&k4), b"C~");
    let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
    assert_eq!(write_graph6(&c5), b"Dhc");
    let p7 = generate(&FamilySpec::Path { n: 7 }).unwrap();
    assert_eq!(write_graph6(&p7), b"FhCGG");
    let petersen = parse_graph6(b"IheA@GUAo").unwrap();
    assert_eq!((petersen.n(), petersen.m()), (10, 15));
    assert!((0..10).all(|v| petersen.degree(v) == 3));
    assert!(write_graph6(&generate(&FamilySpec::Complete { n: 63 }).unwrap()).starts_with(b"~??~"));
}

#[test]
fn complete_graphs_match_brute_force_table() {
    // (D1, D2) for K_1..K_16 from an independent brute-force enumeration.
    let table = [
        (1, 0),
        (1, 1),
        (2, 1),
        (2, 2),
        (3, 2),
        (3, 3),
        (4, 3),
        (4, 4),
        (3, 4),
        (5, 5),
        (4, 5),
        (6, 6),
        (5, 6),
        (5, 7),
        (6, 7),
        (4, 8),
    ];
    for (i, &(d1, d2)) in table.iter().enumerate() {
        let n = i + 1;
        let (cf, _) = closed_form_complete(n).unwrap();
        assert_eq!((cf.d1.value(), cf.d2.value()), (Some(d1), Some(d2)), "K{n}");
        let g = generate(&FamilySpec::Complete { n }).unwrap();
        let r = solve_exact(&g, SolveOptions::default()).unwrap();
        assert_eq!((r.d1, r.d2), (d1, d2), "K{n}");
    }
}

#[test]
fn petersen_exact() {
    let g = parse_graph6(b"IheA@GUAo").unwrap();
    let r = solve_exact(&g, SolveOptions::default()).unwrap();
    assert!(r.cordial);
    assert_eq!(r.d2, 1);
}

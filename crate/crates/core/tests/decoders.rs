//! Cross-checks the two matching decoders against a brute-force reference
//! that enumerates every edge subset of a small window.

mod common;

use common::{
    correction_matches_defects, defect_mask, mask_to_indices, ExhaustiveTable,
};
use windec::decoder::{
    DefectSet, ExactPairingOracle, InnerDecoder, UnionFindDecoder, WindowView,
};
use windec::graph::{
    build_graph, extract_syndrome, sample_error, shot_seed, CodeFamily, CodeParams,
    DecodingGraph, ErrorConfiguration,
};
use windec::window::{BoundaryKind, Window, WindowLayer};

fn window(rounds: (usize, usize), bottom: BoundaryKind, top: BoundaryKind) -> Window {
    Window { rounds, commit: rounds, layer: WindowLayer::Sliding { index: 0 }, bottom, top }
}

/// Small windows whose edge count admits full subset enumeration.
fn tiny_cases() -> Vec<(DecodingGraph, Window)> {
    let rep3 = build_graph(CodeParams::new(CodeFamily::Repetition, 3, 6, 0.02).unwrap()).unwrap();
    let rep5 = build_graph(CodeParams::new(CodeFamily::Repetition, 5, 4, 0.03).unwrap()).unwrap();
    let rot3 =
        build_graph(CodeParams::new(CodeFamily::RotatedPlanar, 3, 4, 0.02).unwrap()).unwrap();
    vec![
        // Whole-history window of a short repetition memory: 13 edges.
        (rep3.clone(), window((0, 3), BoundaryKind::Smooth, BoundaryKind::Smooth)),
        // Interior window with rough faces on both sides: 19 edges.
        (rep3.clone(), window((2, 5), BoundaryKind::Rough, BoundaryKind::Rough)),
        // Trailing window, rough below, smooth at the final round: 14 edges.
        (rep3, window((4, 6), BoundaryKind::Rough, BoundaryKind::Smooth)),
        // Wider code, single committed round flanked by rough faces: 17 edges.
        (rep5, window((1, 2), BoundaryKind::Rough, BoundaryKind::Rough)),
        // Surface patch, one round plus the time faults above it: 17 edges.
        (rot3, window((0, 1), BoundaryKind::Smooth, BoundaryKind::Rough)),
    ]
}

#[test]
fn oracle_weight_equals_the_brute_force_minimum() {
    let oracle = ExactPairingOracle::default();
    for (case, (graph, win)) in tiny_cases().into_iter().enumerate() {
        let view = WindowView::new(&graph, win);
        let table = ExhaustiveTable::build(&view);
        for shot in 0..40u64 {
            let p = graph.params.p * 4.0;
            let err = sample_error(&graph, p, shot_seed(900 + case as u64, shot)).unwrap();
            let stream = extract_syndrome(&graph, &err).unwrap();
            let defects = DefectSet::from_defect_bits(&stream.defects, &graph, &win);
            if defects.len() > 12 {
                continue;
            }
            let target = defect_mask(&view, &defects);
            let reference = table.min_weight_for(target);
            let decoded = oracle.decode(&view, &defects).unwrap();
            let (ref_weight, ref_mask) =
                reference.expect("boundary edges make every defect pattern matchable");
            let got = decoded.weight(&graph);
            assert!(
                (got - ref_weight).abs() < 1e-9,
                "case {case} shot {shot}: oracle weight {got}, brute force {ref_weight} \
                 (subset {:?})",
                mask_to_indices(ref_mask)
            );
            assert!(correction_matches_defects(&view, &decoded, &defects));
        }
    }
}

#[test]
fn union_find_is_valid_and_never_beats_the_oracle() {
    let oracle = ExactPairingOracle::default();
    let uf = UnionFindDecoder::default();
    for (case, (graph, win)) in tiny_cases().into_iter().enumerate() {
        let view = WindowView::new(&graph, win);
        for shot in 0..60u64 {
            let p = graph.params.p * 4.0;
            let err = sample_error(&graph, p, shot_seed(7700 + case as u64, shot)).unwrap();
            let stream = extract_syndrome(&graph, &err).unwrap();
            let defects = DefectSet::from_defect_bits(&stream.defects, &graph, &win);
            if defects.len() > 12 {
                continue;
            }
            let fast = uf.decode(&view, &defects).unwrap();
            let exact = oracle.decode(&view, &defects).unwrap();
            assert!(correction_matches_defects(&view, &fast, &defects), "case {case} shot {shot}");
            assert!(correction_matches_defects(&view, &exact, &defects), "case {case} shot {shot}");
            assert!(
                exact.weight(&graph) <= fast.weight(&graph) + 1e-9,
                "case {case} shot {shot}: oracle {} heavier than union-find {}",
                exact.weight(&graph),
                fast.weight(&graph)
            );
        }
    }
}

#[test]
fn every_single_fault_is_corrected_without_a_logical_error_at_d3() {
    for family in [CodeFamily::Repetition, CodeFamily::RotatedPlanar] {
        let params = CodeParams::new(family, 3, 4, 0.02).unwrap();
        let graph = build_graph(params).unwrap();
        let win = window((0, graph.rounds()), BoundaryKind::Smooth, BoundaryKind::Smooth);
        let view = WindowView::new(&graph, win);
        let oracle = ExactPairingOracle::default();
        for fault_id in 0..graph.num_faults() {
            let err = ErrorConfiguration { triggered_faults: vec![fault_id], seed: 0 };
            let stream = extract_syndrome(&graph, &err).unwrap();
            let defects = DefectSet::from_defect_bits(&stream.defects, &graph, &win);
            let correction = oracle.decode(&view, &defects).unwrap();
            // A single fault is its own minimum-weight explanation.
            let fault_weight = graph.faults[fault_id].weight;
            assert!(
                correction.weight(&graph) <= fault_weight + 1e-9,
                "{family:?} fault {fault_id}"
            );
            assert!(correction_matches_defects(&view, &correction, &defects));
            assert_eq!(
                correction.logical_flip, stream.logical_frame,
                "{family:?}: single fault {fault_id} caused a logical error"
            );
        }
    }
}

#[test]
fn union_find_growth_modes_agree_on_validity_over_random_windows() {
    let graph =
        build_graph(CodeParams::new(CodeFamily::RotatedPlanar, 5, 20, 0.02).unwrap()).unwrap();
    let windows = [
        window((0, 20), BoundaryKind::Smooth, BoundaryKind::Smooth),
        window((3, 9), BoundaryKind::Rough, BoundaryKind::Rough),
        window((14, 20), BoundaryKind::Rough, BoundaryKind::Smooth),
    ];
    for (w_idx, win) in windows.into_iter().enumerate() {
        let view = WindowView::new(&graph, win);
        for mode in [
            windec::decoder::GrowthMode::HalfEdge,
            windec::decoder::GrowthMode::FullEdge,
        ] {
            let uf = UnionFindDecoder::new(mode);
            for shot in 0..50u64 {
                let err =
                    sample_error(&graph, 0.02, shot_seed(31_000 + w_idx as u64, shot)).unwrap();
                let stream = extract_syndrome(&graph, &err).unwrap();
                let defects = DefectSet::from_defect_bits(&stream.defects, &graph, &win);
                let correction = uf.decode(&view, &defects).unwrap();
                assert!(
                    correction_matches_defects(&view, &correction, &defects),
                    "window {w_idx} mode {mode:?} shot {shot}"
                );
            }
        }
    }
}

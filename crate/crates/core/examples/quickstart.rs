use windec::decoder::UnionFindDecoder;
use windec::graph::{build_graph, extract_syndrome, sample_error, CodeFamily, CodeParams};
use windec::window::{global_decode, parallel_window_decode, Executor};

fn main() -> windec::Result<()> {
    let params = CodeParams::new(CodeFamily::RotatedPlanar, 5, 20, 0.02)?;
    let graph = build_graph(params)?;

    let err = sample_error(&graph, 0.02, 42)?;
    let stream = extract_syndrome(&graph, &err)?;

    let inner = UnionFindDecoder::default();
    let global = global_decode(&graph, &stream.defects, &inner)?;
    let windowed = parallel_window_decode(&graph, &stream.defects, 5, &inner, &Executor::Serial)?;

    println!(
        "defects: {}  true frame: {}  global: {} ({} window)  parallel: {} ({} windows)",
        stream.defect_count(),
        stream.logical_frame,
        global.correction.logical_flip,
        global.num_windows,
        windowed.correction.logical_flip,
        windowed.num_windows,
    );
    Ok(())
}

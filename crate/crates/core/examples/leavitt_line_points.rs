// Line points of directed graphs and the socle of their Leavitt path
// algebras, with the boundary-path groupoid of an acyclic graph.

use steinberg::graph::{line_points, lpa_socle, materialize_boundary_groupoid, DirectedGraph};
use steinberg::socle::socle;
use steinberg::{FieldSpec, SteinbergAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("loop", r#"{"vertices": ["v"], "edges": [["e", "v", "v"]]}"#),
        (
            "line",
            r#"{"vertices": ["v1", "v2", "v3"], "edges": [["e1", "v1", "v2"], ["e2", "v2", "v3"]]}"#,
        ),
        (
            "loop with exit",
            r#"{"vertices": ["u", "w"], "edges": [["l", "u", "u"], ["x", "u", "w"]]}"#,
        ),
    ];
    for (label, text) in graphs {
        let g = DirectedGraph::from_json(text)?;
        let lp = line_points(&g);
        let names: Vec<&str> = lp.line_points.iter().map(|&v| g.vertices()[v].as_str()).collect();
        let blocks: Vec<String> = lpa_socle(&g).iter().map(|b| format!("M_{}", b.size)).collect();
        println!("{label}: line points {names:?}, socle blocks {blocks:?}");
        if g.is_acyclic() {
            let gp = materialize_boundary_groupoid(&g)?;
            let report = socle(&SteinbergAlgebra::new(&gp, FieldSpec::Rationals))?;
            println!(
                "  boundary-path groupoid: {} elements, matrix sizes {:?}",
                gp.len(),
                report.matrix_sizes()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

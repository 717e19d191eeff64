//! Geometry and data export: OBJ meshes of box families (centred on the
//! circumscribed box), SVG diagrams of the planar 5-cliques, and raw JSON.

use anyhow::{anyhow, bail, Context, Result};
use boxclique_core::fixtures::FixtureSet;
use boxclique_core::interval::Box3;
use boxclique_core::pipeline::{self, CliqueRecord};
use boxclique_core::planar::{solve_construction_2d, FiveCycle};
use std::fmt::Write as _;
use std::path::Path;

pub fn run(out: &Path, fixtures: &Path, kind: &str, target: &str) -> Result<()> {
    match kind {
        "obj" => {
            let boxes = resolve_boxes(out, fixtures, target)?;
            let name = sanitize(target);
            let path = out.join(format!("{name}.obj"));
            std::fs::write(&path, obj_mesh(&boxes))?;
            println!("wrote {}", path.display());
        }
        "svg" => {
            if target != "figure2" {
                bail!("unknown svg target {target} (supported: figure2)");
            }
            let path = out.join("figure2.svg");
            std::fs::write(&path, figure2_svg())?;
            println!("wrote {}", path.display());
        }
        "json" => {
            let boxes = resolve_boxes(out, fixtures, target)?;
            let name = sanitize(target);
            let path = out.join(format!("{name}.json"));
            std::fs::write(&path, serde_json::to_string_pretty(&boxes)?)?;
            println!("wrote {}", path.display());
        }
        other => bail!("unknown export kind {other} (obj, svg or json)"),
    }
    Ok(())
}

fn sanitize(target: &str) -> String {
    target
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn resolve_boxes(out: &Path, fixtures: &Path, target: &str) -> Result<Vec<Box3>> {
    let fx = FixtureSet::new(fixtures);
    if let Some((family, idx)) = target
        .strip_suffix(']')
        .and_then(|t| t.split_once('['))
    {
        let i: usize = idx.parse().context("array index")?;
        let path = out.join(format!("{family}.json"));
        if !path.exists() {
            bail!(
                "artifact {} is missing; run `boxclique pipeline` first",
                path.display()
            );
        }
        let records: Vec<CliqueRecord> =
            serde_json::from_str(&std::fs::read_to_string(&path)?)?;
        let rec = records
            .get(i)
            .ok_or_else(|| anyhow!("{family} has {} members, index {i} is out of range", records.len()))?;
        return Ok(rec.boxes.clone());
    }
    match target {
        "example" => Ok(pipeline::example_clique().boxes),
        "d1" | "d2" | "c1" | "c2" => Ok(fx.clique(target)?),
        other => bail!("unknown target {other}"),
    }
}

/// Wavefront OBJ: one group per box, translated so that the circumscribed
/// box is centred at the origin.
fn obj_mesh(boxes: &[Box3]) -> String {
    let mut min = [i32::MAX; 3];
    let mut max = [i32::MIN; 3];
    for b in boxes {
        for a in 0..3 {
            min[a] = min[a].min(b.coord(a).lo());
            max[a] = max[a].max(b.coord(a).hi());
        }
    }
    // doubled units: centre offset in quarters to stay exact, emitted halved
    let centre: Vec<f64> = (0..3).map(|a| (min[a] + max[a]) as f64 / 2.0).collect();
    let mut obj = String::from("# axis-aligned box family\n");
    let mut vbase = 1usize;
    for (i, b) in boxes.iter().enumerate() {
        let lo: Vec<f64> = (0..3)
            .map(|a| (b.coord(a).lo() as f64 - centre[a]) / 2.0)
            .collect();
        let hi: Vec<f64> = (0..3)
            .map(|a| (b.coord(a).hi() as f64 - centre[a]) / 2.0)
            .collect();
        let _ = writeln!(obj, "g box{:02}", i + 1);
        for zi in [lo[2], hi[2]] {
            for yi in [lo[1], hi[1]] {
                for xi in [lo[0], hi[0]] {
                    let _ = writeln!(obj, "v {xi} {yi} {zi}");
                }
            }
        }
        // vertex order: x fastest, then y, then z
        let q = [
            [0, 1, 3, 2], // bottom (z = lo)
            [4, 6, 7, 5], // top
            [0, 4, 5, 1], // front (y = lo)
            [2, 3, 7, 6], // back
            [0, 2, 6, 4], // left (x = lo)
            [1, 5, 7, 3], // right
        ];
        for face in q {
            let _ = writeln!(
                obj,
                "f {} {} {} {}",
                vbase + face[0],
                vbase + face[1],
                vbase + face[2],
                vbase + face[3]
            );
        }
        vbase += 8;
    }
    obj
}

/// The ten planar 5-cliques over the smallest cycle pair, as a grid of
/// rectangle diagrams.
fn figure2_svg() -> String {
    let cycle = FiveCycle::new([0, 1, 2, 3, 4]).expect("valid cycle");
    let cliques = solve_construction_2d(&cycle, &cycle);
    let colors = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1"];
    let cell = 120.0;
    let pad = 14.0;
    let cols = 5usize;
    let rows = cliques.len().div_ceil(cols);
    let width = cols as f64 * (cell + pad) + pad;
    let height = rows as f64 * (cell + pad) + pad;
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    );
    let scale = cell / 8.0; // doubled units run 0..8
    for (k, clique) in cliques.iter().enumerate() {
        let ox = pad + (k % cols) as f64 * (cell + pad);
        let oy = pad + (k / cols) as f64 * (cell + pad);
        let _ = writeln!(
            svg,
            "<rect x=\"{ox}\" y=\"{oy}\" width=\"{cell}\" height=\"{cell}\" fill=\"none\" stroke=\"#999\"/>"
        );
        for (bi, b) in clique.iter().enumerate() {
            let x = ox + b.coord(0).lo() as f64 * scale;
            let w = (b.coord(0).hi() - b.coord(0).lo()) as f64 * scale;
            // svg y axis points down; flip
            let y = oy + cell - b.coord(1).hi() as f64 * scale;
            let h = (b.coord(1).hi() - b.coord(1).lo()) as f64 * scale;
            let _ = writeln!(
                svg,
                "<rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"{}\" fill-opacity=\"0.55\" stroke=\"#333\" stroke-width=\"0.8\"/>",
                colors[bi % colors.len()]
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

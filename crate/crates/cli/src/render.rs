//! SVG rendering of the three-candidate hull picture.
//!
//! The drawing keeps every data coordinate as an exact integer: geometry
//! lives in a group flipped to the usual mathematical orientation, and
//! the viewport auto-scales through the `viewBox`. The Pareto-boundary
//! chain is emitted with `class="pareto"` so tools (and tests) can find
//! it without geometry parsing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use deborda_core::hull::{HullGeometry, Point, hull_geometry};
use deborda_core::profile::Profile;

use crate::AppError;
use crate::report::{PlotDoc, plot_doc};

/// A rendered plot: the SVG text and its JSON twin.
#[derive(Debug)]
pub struct PlotDocument {
    pub svg: String,
    pub json: PlotDoc,
}

/// Render the hull picture of a three-candidate profile.
pub fn plot_hull(profile: &Profile) -> Result<PlotDocument, AppError> {
    let geometry = hull_geometry(profile)?;
    Ok(PlotDocument {
        svg: svg_document(profile, &geometry),
        json: plot_doc(profile, &geometry),
    })
}

fn points_attr(points: &[Point]) -> String {
    points
        .iter()
        .map(|p| format!("{},{}", p[0], p[1]))
        .collect::<Vec<_>>()
        .join(" ")
}

fn svg_document(profile: &Profile, geometry: &HullGeometry) -> String {
    let max_x = geometry.points.iter().map(|p| p[0]).max().unwrap_or(1).max(1);
    let max_y = geometry.points.iter().map(|p| p[1]).max().unwrap_or(1).max(1);
    let pad = (max_x.max(max_y) / 8).max(2);
    let width = max_x + 2 * pad;
    let height = max_y + 2 * pad;
    let marker = (max_x.max(max_y) as f64 / 40.0).max(0.3);
    let font = (max_x.max(max_y) as f64 / 12.0).max(1.0);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        -(pad as i64),
        -(pad as i64),
        width,
        height
    );
    let _ = writeln!(
        svg,
        "  <style>\n    .axis {{ stroke: #b0b0b0; stroke-width: {w:.2}; }}\n    .hull {{ fill: #9ecae1; fill-opacity: 0.35; stroke: #3182bd; stroke-width: {w:.2}; }}\n    .pareto {{ fill: none; stroke: #d62728; stroke-width: {w2:.2}; }}\n    .score {{ fill: #252525; }}\n    text {{ font-family: sans-serif; font-size: {font:.2}px; fill: #252525; }}\n  </style>",
        w = marker / 2.0,
        w2 = marker,
        font = font
    );

    // Geometry in mathematical orientation: y grows upward.
    let _ = writeln!(svg, "  <g transform=\"translate(0,{max_y}) scale(1,-1)\">");
    let _ = writeln!(
        svg,
        "    <line class=\"axis\" x1=\"0\" y1=\"0\" x2=\"{}\" y2=\"0\"/>",
        max_x + pad
    );
    let _ = writeln!(
        svg,
        "    <line class=\"axis\" x1=\"0\" y1=\"0\" x2=\"0\" y2=\"{}\"/>",
        max_y + pad
    );
    match geometry.hull.len() {
        0 | 1 => {}
        2 => {
            let _ = writeln!(
                svg,
                "    <polyline class=\"hull\" points=\"{}\"/>",
                points_attr(&geometry.hull)
            );
        }
        _ => {
            let _ = writeln!(
                svg,
                "    <polygon class=\"hull\" points=\"{}\"/>",
                points_attr(&geometry.hull)
            );
        }
    }
    if geometry.strict_chain.len() >= 2 {
        let _ = writeln!(
            svg,
            "    <polyline class=\"pareto\" points=\"{}\"/>",
            points_attr(&geometry.strict_chain)
        );
    } else if let Some(p) = geometry.strict_chain.first() {
        let _ = writeln!(
            svg,
            "    <circle class=\"pareto\" cx=\"{}\" cy=\"{}\" r=\"{:.2}\"/>",
            p[0],
            p[1],
            marker * 1.6
        );
    }
    // One marker per distinct point; labels are grouped below.
    let mut sites: BTreeMap<Point, Vec<String>> = BTreeMap::new();
    for (a, &pt) in geometry.points.iter().enumerate() {
        sites
            .entry(pt)
            .or_default()
            .push(profile.label(a).to_string());
    }
    for pt in sites.keys() {
        let _ = writeln!(
            svg,
            "    <circle class=\"score\" cx=\"{}\" cy=\"{}\" r=\"{marker:.2}\"/>",
            pt[0], pt[1]
        );
    }
    let _ = writeln!(svg, "  </g>");

    // Labels in screen space (text must not be mirrored).
    for (pt, who) in &sites {
        let _ = writeln!(
            svg,
            "  <text x=\"{:.2}\" y=\"{:.2}\">{}</text>",
            pt[0] as f64 + 1.5 * marker,
            (max_y - pt[1]) as f64 - 1.5 * marker,
            who.join(", ")
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    const DEMO: &str = "2: a > b > c\n6: b > a > c\n7: c > a > b\n1: c > b > a";

    #[test]
    fn demo_profile_plot_contract() {
        let pr = Profile::parse(DEMO).unwrap();
        let plot = plot_hull(&pr).unwrap();
        assert!(plot.svg.contains("<polyline class=\"pareto\" points=\"8,8 2,15\"/>"));
        assert!(plot.svg.contains("<polygon class=\"hull\" points=\"2,15 6,9 8,8\"/>"));
        assert_eq!(plot.json.boundary, vec!["a", "c"]);
        assert_eq!(plot.json.pareto_chain, vec![[8, 8], [2, 15]]);
    }

    #[test]
    fn degenerate_hulls_still_render() {
        let segment = Profile::parse("1: a > b > c\n1: c > b > a").unwrap();
        let plot = plot_hull(&segment).unwrap();
        assert!(plot.svg.contains("polyline class=\"hull\""));
        assert_eq!(plot.json.boundary, vec!["a", "b", "c"]);

        let unanimous = Profile::parse("5: a > b > c").unwrap();
        let plot = plot_hull(&unanimous).unwrap();
        // Single-point boundary renders as a highlighted circle.
        assert!(plot.svg.contains("circle class=\"pareto\""));
        assert_eq!(plot.json.boundary, vec!["a"]);
    }

    #[test]
    fn rejects_non_planar_profiles() {
        let pr = Profile::parse("1: w > x > y > z").unwrap();
        match plot_hull(&pr) {
            Err(AppError::Domain(msg)) => assert!(msg.contains("p=3")),
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn rendering_is_deterministic() {
        let pr = Profile::parse(DEMO).unwrap();
        let one = plot_hull(&pr).unwrap();
        let two = plot_hull(&pr).unwrap();
        assert_eq!(one.svg, two.svg);
        assert_eq!(
            serde_json::to_string(&one.json).unwrap(),
            serde_json::to_string(&two.json).unwrap()
        );
    }
}

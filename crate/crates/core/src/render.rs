// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! SVG figures of rosettes and their derived fronts.
//!
//! The y axis is flipped so that counterclockwise curves render
//! counterclockwise. Source curves are dashed and derived fronts solid; a
//! front that degenerates to a point is drawn as a filled dot. All numbers
//! are written with six decimals, so identical scenes give identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::derived::{
    base_front, cwms_support, equidistant_branch, offset_support, sample_front, sms_support, wigner_branch,
    FrontSupport,
};
use crate::error::{Error, Result};
use crate::pair::pair_branch;
use crate::rosette::{FourierSupport, PlanePoint};
use crate::singularities::find_cusps;

pub const RENDER_SAMPLES: usize = 4096;

/// One curve layer of a scene.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Layer {
    Base,
    Wigner { k: u32 },
    Equidistant { lambda: f64, k: u32 },
    Cwms,
    Sms,
    Offset { alpha: f64 },
    Pair { lambda: f64, k: u32 },
}

fn parse_num<T: FromStr>(text: &str, what: &str) -> Result<T> {
    text.trim().parse().map_err(|_| Error::Parse(format!("bad {what} '{text}' in layer")))
}

impl FromStr for Layer {
    type Err = Error;

    /// `base`, `wigner:K`, `equidistant:L:K`, `cwms`, `sms`, `offset:A`,
    /// `pair:L:K`; `,` is accepted in place of the second `:`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split([':', ',']).collect();
        let layer = match parts.as_slice() {
            ["base"] => Layer::Base,
            ["cwms"] => Layer::Cwms,
            ["sms"] => Layer::Sms,
            ["wigner", k] => Layer::Wigner { k: parse_num(k, "k")? },
            ["offset", a] => Layer::Offset { alpha: parse_num(a, "alpha")? },
            ["equidistant", l, k] => Layer::Equidistant { lambda: parse_num(l, "lambda")?, k: parse_num(k, "k")? },
            ["pair", l, k] => Layer::Pair { lambda: parse_num(l, "lambda")?, k: parse_num(k, "k")? },
            _ => return Err(Error::Parse(format!("unknown layer '{s}'"))),
        };
        Ok(layer)
    }
}

/// Scene file: curve files (relative to the scene file) and layer names.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneSpec {
    pub curves: Vec<String>,
    pub layers: Vec<String>,
    #[serde(default)]
    pub samples: Option<usize>,
    #[serde(default)]
    pub stroke_width: Option<f64>,
    #[serde(default)]
    pub mark_cusps: bool,
}

/// A resolved scene ready to draw.
#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub curves: Vec<FourierSupport>,
    pub layers: Vec<Layer>,
    pub samples: usize,
    pub stroke_width: f64,
    pub mark_cusps: bool,
}

impl Scene {
    pub fn new(curves: Vec<FourierSupport>, layers: Vec<Layer>) -> Self {
        Scene { curves, layers, samples: RENDER_SAMPLES, stroke_width: 1.0, mark_cusps: false }
    }
}

struct Drawn {
    points: Vec<PlanePoint>,
    dashed: bool,
    is_point: bool,
    cusps: Vec<PlanePoint>,
}

fn fronts_of(scene: &Scene, layer: Layer) -> Result<Vec<(FrontSupport, bool)>> {
    let p = scene.curves.first().ok_or_else(|| Error::Parse("scene has no curve".into()))?;
    let fronts = match layer {
        Layer::Base => scene.curves.iter().map(|c| (base_front(c), true)).collect(),
        Layer::Wigner { k } => vec![(wigner_branch(p, k)?, false)],
        Layer::Equidistant { lambda, k } => vec![(equidistant_branch(p, lambda, k)?, false)],
        Layer::Cwms => vec![(cwms_support(p), false)],
        Layer::Sms => vec![(sms_support(p), false)],
        Layer::Offset { alpha } => vec![(offset_support(p, alpha), false)],
        Layer::Pair { lambda, k } => {
            let q = scene.curves.get(1).ok_or_else(|| Error::Parse("pair layer needs two curves".into()))?;
            vec![(pair_branch(p, q, lambda, k)?.support, false)]
        }
    };
    Ok(fronts)
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

const PALETTE: [&str; 6] = ["#1f4e9c", "#c0392b", "#1e8449", "#8e44ad", "#d35400", "#117a65"];

/// Renders the scene as an SVG 1.1 document.
pub fn render_svg(scene: &Scene) -> Result<String> {
    let mut drawn = Vec::new();
    for &layer in &scene.layers {
        for (front, dashed) in fronts_of(scene, layer)? {
            let samples = sample_front(&front, scene.samples)?;
            let cusps = if scene.mark_cusps && !samples.is_point {
                find_cusps(&front).locations.iter().map(|&t| front.point_at(t)).collect()
            } else {
                Vec::new()
            };
            drawn.push(Drawn { points: samples.points, dashed, is_point: samples.is_point, cusps });
        }
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for d in &drawn {
        for q in &d.points {
            x0 = x0.min(q.x);
            x1 = x1.max(q.x);
            y0 = y0.min(-q.y);
            y1 = y1.max(-q.y);
        }
    }
    if !x0.is_finite() {
        (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
    }
    let extent = (x1 - x0).max(y1 - y0);
    let extent = if extent > 0.0 { extent } else { 2.0 };
    let margin = 0.05 * extent;
    let (vx, vy) = (x0 - margin, y0 - margin);
    let (vw, vh) = ((x1 - x0).max(extent * 1e-3) + 2.0 * margin, (y1 - y0).max(extent * 1e-3) + 2.0 * margin);
    let stroke = scene.stroke_width * extent / 400.0;
    let width = 800.0;
    let height = (width * vh / vw).round().max(1.0);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        width as u32,
        height as u32,
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    )
    .unwrap();
    svg.push_str("<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    let mut colour = 0;
    for d in &drawn {
        let stroke_colour = if d.dashed { "#555555" } else { PALETTE[colour % PALETTE.len()] };
        if !d.dashed {
            colour += 1;
        }
        if d.is_point {
            let q = d.points[0];
            writeln!(
                svg,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{stroke_colour}\"/>",
                num(q.x),
                num(-q.y),
                num(4.0 * stroke)
            )
            .unwrap();
            continue;
        }
        let mut pts = String::new();
        for (i, q) in d.points.iter().enumerate() {
            if i > 0 {
                pts.push(' ');
            }
            write!(pts, "{},{}", num(q.x), num(-q.y)).unwrap();
        }
        let dash = if d.dashed {
            format!(" stroke-dasharray=\"{} {}\"", num(6.0 * stroke), num(4.0 * stroke))
        } else {
            String::new()
        };
        writeln!(
            svg,
            "<polyline fill=\"none\" stroke=\"{stroke_colour}\" stroke-width=\"{}\" stroke-linejoin=\"round\"{dash} points=\"{pts}\"/>",
            num(stroke)
        )
        .unwrap();
        for c in &d.cusps {
            writeln!(
                svg,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>",
                num(c.x),
                num(-c.y),
                num(2.5 * stroke)
            )
            .unwrap();
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::HarmonicTerm;

    fn rosette_m2() -> FourierSupport {
        FourierSupport::new(2, 10.0, vec![HarmonicTerm::cos(1, 4.0), HarmonicTerm::sin(4, 1.0)]).unwrap()
    }

    #[test]
    fn layer_names() {
        assert_eq!("base".parse::<Layer>().unwrap(), Layer::Base);
        assert_eq!("wigner:2".parse::<Layer>().unwrap(), Layer::Wigner { k: 2 });
        assert_eq!("equidistant:0.3,1".parse::<Layer>().unwrap(), Layer::Equidistant { lambda: 0.3, k: 1 });
        assert_eq!("pair:0.5:0".parse::<Layer>().unwrap(), Layer::Pair { lambda: 0.5, k: 0 });
        assert_eq!("offset:-1.5".parse::<Layer>().unwrap(), Layer::Offset { alpha: -1.5 });
        assert!("wigner".parse::<Layer>().is_err());
        assert!("ellipse".parse::<Layer>().is_err());
    }

    #[test]
    fn circle_is_one_polyline() {
        let svg = render_svg(&Scene::new(vec![FourierSupport::circle(1.0)], vec![Layer::Base])).unwrap();
        assert!(svg.starts_with("<?xml"));
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains("viewBox=\"-1.100000 -1.100000 2.200000 2.200000\""));
    }

    #[test]
    fn identical_scenes_are_byte_identical() {
        let scene = Scene {
            mark_cusps: true,
            ..Scene::new(vec![rosette_m2()], vec![Layer::Base, Layer::Cwms, Layer::Wigner { k: 1 }])
        };
        let a = render_svg(&scene).unwrap();
        let b = render_svg(&scene.clone()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("<polyline").count(), 3);
        assert_eq!(a.matches("fill=\"black\"").count(), 2);
    }

    #[test]
    fn point_front_is_a_dot() {
        let svg = render_svg(&Scene::new(vec![FourierSupport::circle(1.0)], vec![Layer::Base, Layer::Sms])).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 1);
    }

    #[test]
    fn pair_layer_needs_two_curves() {
        assert!(render_svg(&Scene::new(vec![rosette_m2()], vec![Layer::Pair { lambda: 0.5, k: 0 }])).is_err());
        let svg = render_svg(&Scene::new(
            vec![rosette_m2(), rosette_m2()],
            vec![Layer::Base, Layer::Pair { lambda: 0.5, k: 1 }],
        ))
        .unwrap();
        assert_eq!(svg.matches("<polyline").count(), 3);
    }
}

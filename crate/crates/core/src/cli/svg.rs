// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! Single-polyline SVG plots.

use std::fmt::Write as _;

use crate::curve::PlanePoint;
use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    pub width_px: u32,
    pub height_px: u32,
    /// Padding around the data, as a fraction of its extent.
    pub margin_fraction: f64,
    /// Stroke width as a fraction of the bounding-box diagonal.
    pub stroke_relative: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width_px: 800,
            height_px: 800,
            margin_fraction: 0.05,
            stroke_relative: 0.002,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if self.width_px == 0 || self.height_px == 0 {
            return Err(invalid("image dimensions must be positive"));
        }
        if !(0.0..0.5).contains(&self.margin_fraction) {
            return Err(invalid(format!(
                "margin fraction must lie in [0, 0.5), got {}",
                self.margin_fraction
            )));
        }
        if !(self.stroke_relative > 0.0 && self.stroke_relative.is_finite()) {
            return Err(invalid("relative stroke width must be positive"));
        }
        Ok(())
    }
}

struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

fn bounds(points: impl Iterator<Item = PlanePoint>) -> Option<Bounds> {
    points.fold(None, |acc, p| {
        Some(match acc {
            None => Bounds {
                min_x: p.x,
                max_x: p.x,
                min_y: p.y,
                max_y: p.y,
            },
            Some(b) => Bounds {
                min_x: b.min_x.min(p.x),
                max_x: b.max_x.max(p.x),
                min_y: b.min_y.min(p.y),
                max_y: b.max_y.max(p.y),
            },
        })
    })
}

/// Render `points` as one polyline and each marker as a filled circle.
///
/// The y axis points up, as in the mathematical plane.
pub fn render_polyline(
    points: &[PlanePoint],
    markers: &[PlanePoint],
    opts: &RenderOptions,
) -> Result<String> {
    opts.validate()?;
    if points.len() < 2 {
        return Err(invalid("a polyline needs at least two points"));
    }
    if let Some(p) = points.iter().chain(markers).find(|p| !p.is_finite()) {
        return Err(invalid(format!("cannot plot non-finite point {p:?}")));
    }
    let b = bounds(points.iter().chain(markers).copied()).expect("non-empty");
    let mut width = b.max_x - b.min_x;
    let mut height = b.max_y - b.min_y;
    if width == 0.0 && height == 0.0 {
        width = 1.0;
        height = 1.0;
    } else if width == 0.0 {
        width = height;
    } else if height == 0.0 {
        height = width;
    }
    let cx = 0.5 * (b.min_x + b.max_x);
    let cy = 0.5 * (b.min_y + b.max_y);
    let diag = width.hypot(height);
    let stroke = opts.stroke_relative * diag;
    let pad_x = opts.margin_fraction * width;
    let pad_y = opts.margin_fraction * height;
    let view_w = width + 2.0 * pad_x;
    let view_h = height + 2.0 * pad_y;
    // Screen y = −y.
    let view_x = cx - 0.5 * view_w;
    let view_y = -cy - 0.5 * view_h;

    let decimals = (6 - diag.log10().floor() as i32).clamp(0, 15) as usize;
    let num = |v: f64| {
        let s = format!("{v:.decimals$}");
        // Avoid "-0.000".
        if s.trim_start_matches('-')
            .chars()
            .all(|c| c == '0' || c == '.')
        {
            s.trim_start_matches('-').to_string()
        } else {
            s
        }
    };

    let mut out = String::with_capacity(points.len() * 24 + 512);
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        opts.width_px,
        opts.height_px,
        num(view_x),
        num(view_y),
        num(view_w),
        num(view_h)
    );
    let _ = write!(
        out,
        "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-linejoin=\"round\" points=\"",
        num(stroke)
    );
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{},{}", num(p.x), num(-p.y));
    }
    out.push_str("\"/>\n");
    for m in markers {
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"red\"/>",
            num(m.x),
            num(-m.y),
            num(2.0 * stroke)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Vec<PlanePoint> {
        vec![
            PlanePoint::new(0.0, 0.0),
            PlanePoint::new(1.0, 0.0),
            PlanePoint::new(1.0, 1.0),
        ]
    }

    #[test]
    fn viewbox_includes_margin_and_flips_y() {
        let svg = render_polyline(&square(), &[], &RenderOptions::default()).unwrap();
        assert!(
            svg.contains("viewBox=\"-0.050000 -1.050000 1.100000 1.100000\""),
            "{svg}"
        );
        assert!(svg.contains("points=\"0.000000,0.000000 1.000000,0.000000 1.000000,-1.000000\""));
        assert_eq!(svg.matches("<polyline").count(), 1);
    }

    #[test]
    fn markers_are_circles_twice_the_stroke() {
        let opts = RenderOptions::default();
        let svg = render_polyline(&square(), &[PlanePoint::new(0.5, 0.5)], &opts).unwrap();
        let stroke = 0.002 * 2f64.sqrt();
        assert!(svg.contains(&format!("stroke-width=\"{:.6}\"", stroke)));
        assert!(svg.contains(&format!("r=\"{:.6}\"", 2.0 * stroke)));
        assert!(svg.contains("cx=\"0.500000\" cy=\"-0.500000\""));
    }

    #[test]
    fn deterministic_output() {
        let a = render_polyline(&square(), &[], &RenderOptions::default()).unwrap();
        let b = render_polyline(&square(), &[], &RenderOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_options_rejected() {
        let mut o = RenderOptions {
            margin_fraction: 0.5,
            ..RenderOptions::default()
        };
        assert!(render_polyline(&square(), &[], &o).is_err());
        o = RenderOptions {
            width_px: 0,
            ..RenderOptions::default()
        };
        assert!(render_polyline(&square(), &[], &o).is_err());
        assert!(render_polyline(&square()[..1], &[], &RenderOptions::default()).is_err());
    }
}

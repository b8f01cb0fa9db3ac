//! Static SVG scatter of persistence diagrams: finite points as dots,
//! essential points as arrows leaving through the infinite-death edge.

use std::fmt::Write as _;

use cliph_core::complex::Direction;
use cliph_core::persistence::PersistenceDiagram;
use cliph_core::ratio::to_f64;

const SIZE: f64 = 600.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_BOTTOM: f64 = 50.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_RIGHT: f64 = 30.0;

fn color_of(dim: u32) -> &'static str {
    match dim {
        0 => "#1f77b4",
        1 => "#d62728",
        _ => "#7f7f7f",
    }
}

pub fn render_svg(diagrams: &[PersistenceDiagram]) -> String {
    let mut lo = 0.0f64;
    let mut hi = f64::NEG_INFINITY;
    for d in diagrams {
        for pt in &d.points {
            let b = to_f64(pt.birth);
            lo = lo.min(b);
            hi = hi.max(b);
            if let Some(death) = pt.death {
                let t = to_f64(death);
                lo = lo.min(t);
                hi = hi.max(t);
            }
        }
    }
    if !hi.is_finite() || hi <= lo {
        hi = lo + 1.0;
    }
    let pad = (hi - lo) * 0.08;
    let (lo, hi) = (lo - pad, hi + pad);

    let sx = move |v: f64| {
        MARGIN_LEFT + (v - lo) / (hi - lo) * (SIZE - MARGIN_LEFT - MARGIN_RIGHT)
    };
    let sy = move |v: f64| {
        SIZE - MARGIN_BOTTOM - (v - lo) / (hi - lo) * (SIZE - MARGIN_TOP - MARGIN_BOTTOM)
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" \
         viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>");

    // Frame and diagonal.
    let (x0, x1) = (sx(lo), sx(hi));
    let (y0, y1) = (sy(lo), sy(hi));
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>"
    );
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>"
    );
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y1}\" stroke=\"#bbbbbb\" \
         stroke-dasharray=\"5,4\"/>"
    );
    for i in 0..=4 {
        let v = lo + (hi - lo) * f64::from(i) / 4.0;
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{v:.2}</text>",
            sx(v),
            y0 + 18.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{v:.2}</text>",
            x0 - 6.0,
            sy(v) + 4.0
        );
    }
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">birth</text>",
        (x0 + x1) / 2.0,
        SIZE - 10.0
    );
    let _ = writeln!(
        out,
        "<text x=\"14\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\" \
         transform=\"rotate(-90 14 {})\">death</text>",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    );

    for (i, d) in diagrams.iter().enumerate() {
        let color = color_of(d.dimension);
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"13\" fill=\"{color}\">H{}</text>",
            SIZE - MARGIN_RIGHT - 30.0,
            MARGIN_TOP + 16.0 * i as f64,
            d.dimension
        );
        for pt in &d.points {
            let bx = sx(to_f64(pt.birth));
            match pt.death {
                Some(death) => {
                    let _ = writeln!(
                        out,
                        "<circle cx=\"{bx}\" cy=\"{}\" r=\"4\" fill=\"{color}\" \
                         fill-opacity=\"0.8\"/>",
                        sy(to_f64(death))
                    );
                }
                None => {
                    // Arrow from the diagonal toward the open end of the
                    // death axis: up for ascending values, down otherwise.
                    let start = sy(to_f64(pt.birth));
                    let (apex, base) = match d.kind.direction() {
                        Direction::Ascending => (y1, y1 + 7.0),
                        Direction::Descending => (y0, y0 - 7.0),
                    };
                    let _ = writeln!(
                        out,
                        "<line x1=\"{bx}\" y1=\"{start}\" x2=\"{bx}\" y2=\"{base}\" \
                         stroke=\"{color}\" stroke-width=\"2\"/>"
                    );
                    let _ = writeln!(
                        out,
                        "<path d=\"M {} {base} L {} {base} L {bx} {apex} Z\" fill=\"{color}\"/>",
                        bx - 4.0,
                        bx + 4.0
                    );
                }
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

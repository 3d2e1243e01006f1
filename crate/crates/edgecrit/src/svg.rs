//! Chord diagrams: `n` points evenly spaced on a circle, labelled `1..n`
//! clockwise from the top, with chords drawn as straight segments.

use std::fmt::Write;

use edgecrit_core::criticality::CertificateColoring;
use edgecrit_core::{Chord, ChordSpace};

const SIZE: f64 = 320.0;
const RADIUS: f64 = 120.0;
const LABEL_RADIUS: f64 = 140.0;

/// Stroke colours for shaded classes, darkest first.
const SHADES: [&str; 4] = ["#202020", "#6e6e6e", "#a8a8a8", "#d0d0d0"];

/// A chord with an optional shade class (index into the grey palette).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramChord {
    pub chord: Chord,
    pub class: Option<usize>,
}

fn point(n: u32, i: u32, radius: f64) -> (f64, f64) {
    let angle =
        -std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * f64::from(i - 1) / f64::from(n);
    (
        SIZE / 2.0 + radius * angle.cos(),
        SIZE / 2.0 + radius * angle.sin(),
    )
}

pub fn chord_diagram(n: u32, chords: &[DiagramChord]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(
        out,
        r##"  <circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="#c0c0c0" stroke-width="1"/>"##,
        c = SIZE / 2.0
    )
    .unwrap();
    for item in chords {
        let (x1, y1) = point(n, item.chord.a, RADIUS);
        let (x2, y2) = point(n, item.chord.b, RADIUS);
        let (stroke, class) = match item.class {
            Some(k) => (SHADES[k % SHADES.len()], format!(" class=\"shade-{k}\"")),
            None => (SHADES[0], String::new()),
        };
        writeln!(
            out,
            r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="3"{class}><title>{}</title></line>"#,
            item.chord
        )
        .unwrap();
    }
    for i in 1..=n {
        let (x, y) = point(n, i, RADIUS);
        let (lx, ly) = point(n, i, LABEL_RADIUS);
        writeln!(
            out,
            r#"  <circle cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="central">{i}</text>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Draws the chords coloured by the certificate's extra colours, one grey
/// shade per colour class.
pub fn certificate_diagram(space: &ChordSpace, cert: &CertificateColoring) -> String {
    let chords: Vec<DiagramChord> = cert
        .assignment
        .iter()
        .filter_map(|(v, color)| {
            cert.special_colors
                .iter()
                .position(|&s| s == color)
                .map(|class| DiagramChord {
                    chord: space.chord(v),
                    class: Some(class),
                })
        })
        .collect();
    chord_diagram(space.n(), &chords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_chord() {
        let chord = Chord::new(1, 3, 6).unwrap();
        let svg = chord_diagram(6, &[DiagramChord { chord, class: None }]);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<text").count(), 6);
        // Point 1 sits at the top.
        assert!(svg.contains(r#"<circle cx="160.00" cy="40.00" r="4""#));
    }
}

//! Single-shot SVG rendering of a region's leaves and a spectrum.

use std::fmt::Write;

use specbound::{CassiniOval, Complex64, Region};

const SIZE: f64 = 800.0;
const OVAL_SAMPLES: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn from_slice(v: &[f64]) -> Result<Self, String> {
        let &[re_min, re_max, im_min, im_max] = v else {
            return Err(format!("window needs four numbers, got {}", v.len()));
        };
        if !(re_min < re_max && im_min < im_max) {
            return Err("window must satisfy re_min < re_max and im_min < im_max".into());
        }
        Ok(Window {
            re_min,
            re_max,
            im_min,
            im_max,
        })
    }

    /// Square window around every leaf and eigenvalue, with a 10% margin.
    pub fn fit(region: &Region, eigenvalues: &[Complex64]) -> Self {
        let mut lo = Complex64::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut grow = |c: Complex64, r: f64| {
            lo = Complex64::new(lo.re.min(c.re - r), lo.im.min(c.im - r));
            hi = Complex64::new(hi.re.max(c.re + r), hi.im.max(c.im + r));
        };
        for leaf in region.leaves() {
            match leaf {
                Region::Disk(d) => grow(d.center, d.radius),
                Region::Oval(o) => {
                    let half = (o.focus_b - o.focus_a).norm() / 2.0;
                    grow((o.focus_a + o.focus_b) / 2.0, (half * half + o.radius_product).sqrt());
                }
                Region::Points(ps) => ps.iter().for_each(|&p| grow(p, 0.0)),
                _ => {}
            }
        }
        eigenvalues.iter().for_each(|&z| grow(z, 0.0));
        if !lo.re.is_finite() || !hi.re.is_finite() {
            lo = Complex64::new(-1.0, -1.0);
            hi = Complex64::new(1.0, 1.0);
        }
        let center = (lo + hi) / 2.0;
        let half = ((hi.re - lo.re).max(hi.im - lo.im) / 2.0).max(0.5) * 1.1;
        Window {
            re_min: center.re - half,
            re_max: center.re + half,
            im_min: center.im - half,
            im_max: center.im + half,
        }
    }

    fn x(&self, re: f64) -> f64 {
        (re - self.re_min) / (self.re_max - self.re_min) * SIZE
    }

    fn y(&self, im: f64) -> f64 {
        (self.im_max - im) / (self.im_max - self.im_min) * SIZE
    }

    fn scale(&self) -> (f64, f64) {
        (SIZE / (self.re_max - self.re_min), SIZE / (self.im_max - self.im_min))
    }
}

/// Closed boundary loops of `|z - a||z - b| = p`.
///
/// With foci at `c ± h` the boundary in polar form about `c` satisfies
/// `r⁴ - 2h²r²cos2θ + h⁴ = p²`. For `p >= h²` one root `r²` per angle traces
/// a single loop; otherwise each focus is enclosed by its own loop, traced
/// along the outer root and back along the inner root.
pub fn oval_loops(o: &CassiniOval) -> Vec<Vec<Complex64>> {
    let c = (o.focus_a + o.focus_b) / 2.0;
    let axis = o.focus_b - o.focus_a;
    let h = axis.norm() / 2.0;
    let p = o.radius_product;
    let rot = if h > 0.0 { axis / axis.norm() } else { Complex64::new(1.0, 0.0) };
    let at = |r: f64, theta: f64| c + rot * Complex64::from_polar(r, theta);
    let (h2, h4) = (h * h, h * h * h * h);
    if p >= h2 {
        let ring = (0..OVAL_SAMPLES)
            .map(|k| {
                let theta = std::f64::consts::TAU * k as f64 / OVAL_SAMPLES as f64;
                let cos2 = (2.0 * theta).cos();
                let r2 = h2 * cos2 + (h4 * cos2 * cos2 - h4 + p * p).max(0.0).sqrt();
                at(r2.max(0.0).sqrt(), theta)
            })
            .collect();
        return vec![ring];
    }
    // cos²2θ >= 1 - p²/h⁴ on each lobe
    let limit = 0.5 * (1.0 - p * p / h4).max(0.0).sqrt().acos();
    let half = OVAL_SAMPLES / 2;
    [0.0, std::f64::consts::PI]
        .into_iter()
        .map(|offset| {
            let angle = |k: usize| -limit + 2.0 * limit * k as f64 / (half - 1) as f64;
            let radius = |theta: f64, sign: f64| {
                let cos2 = (2.0 * theta).cos();
                let r2 = h2 * cos2 + sign * (h4 * cos2 * cos2 - h4 + p * p).max(0.0).sqrt();
                r2.max(0.0).sqrt()
            };
            let outer = (0..half).map(|k| at(radius(angle(k), 1.0), angle(k) + offset));
            let inner = (0..half).rev().map(|k| at(radius(angle(k), -1.0), angle(k) + offset));
            outer.chain(inner).collect()
        })
        .collect()
}

pub fn render(region: &Region, eigenvalues: &[Complex64], window: Window) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if window.im_min <= 0.0 && 0.0 <= window.im_max {
        let y = window.y(0.0);
        let _ = writeln!(out, r##"<line class="axis" x1="0" y1="{y:.3}" x2="{SIZE}" y2="{y:.3}" stroke="#999"/>"##);
    }
    if window.re_min <= 0.0 && 0.0 <= window.re_max {
        let x = window.x(0.0);
        let _ = writeln!(out, r##"<line class="axis" x1="{x:.3}" y1="0" x2="{x:.3}" y2="{SIZE}" stroke="#999"/>"##);
    }
    let (sx, sy) = window.scale();
    let _ = writeln!(out, r#"<g class="leaves" fill="none" stroke="steelblue">"#);
    for leaf in region.leaves() {
        match leaf {
            Region::Disk(d) => {
                let _ = writeln!(
                    out,
                    r#"<ellipse class="disk" cx="{:.3}" cy="{:.3}" rx="{:.3}" ry="{:.3}"/>"#,
                    window.x(d.center.re),
                    window.y(d.center.im),
                    d.radius * sx,
                    d.radius * sy
                );
            }
            Region::Oval(o) => {
                for ring in oval_loops(o) {
                    let pts: Vec<String> = ring
                        .iter()
                        .map(|z| format!("{:.3},{:.3}", window.x(z.re), window.y(z.im)))
                        .collect();
                    let _ = writeln!(out, r#"<polygon class="oval" points="{}"/>"#, pts.join(" "));
                }
            }
            Region::Points(ps) => {
                for p in ps {
                    let _ = writeln!(
                        out,
                        r#"<rect class="point" x="{:.3}" y="{:.3}" width="6" height="6"/>"#,
                        window.x(p.re) - 3.0,
                        window.y(p.im) - 3.0
                    );
                }
            }
            _ => {}
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g class="eigenvalues" fill="crimson">"#);
    for z in eigenvalues {
        let _ = writeln!(
            out,
            r#"<circle class="eigenvalue" cx="{:.3}" cy="{:.3}" r="3"/>"#,
            window.x(z.re),
            window.y(z.im)
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn on_boundary(o: &CassiniOval, z: Complex64) -> bool {
        ((z - o.focus_a).norm() * (z - o.focus_b).norm() - o.radius_product).abs() <= 1e-9
    }

    #[test]
    fn single_loop_lies_on_the_curve() {
        let o = CassiniOval::new(c(-1.0, 1.0), c(2.0, 0.0), 4.0);
        let loops = oval_loops(&o);
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].len(), OVAL_SAMPLES);
        assert!(loops[0].iter().all(|&z| on_boundary(&o, z)));
    }

    #[test]
    fn split_oval_has_two_loops_around_the_foci() {
        let o = CassiniOval::new(c(-2.0, 0.0), c(2.0, 0.0), 1.0);
        let loops = oval_loops(&o);
        assert_eq!(loops.len(), 2);
        for ring in &loops {
            assert_eq!(ring.len(), OVAL_SAMPLES);
            assert!(ring.iter().all(|&z| on_boundary(&o, z)));
        }
        assert!(loops[0].iter().all(|z| z.re > 0.0));
        assert!(loops[1].iter().all(|z| z.re < 0.0));
    }

    #[test]
    fn coincident_foci_give_a_circle() {
        let o = CassiniOval::new(c(1.0, 1.0), c(1.0, 1.0), 4.0);
        let loops = oval_loops(&o);
        assert!(loops[0].iter().all(|z| ((z - c(1.0, 1.0)).norm() - 2.0).abs() < 1e-12));
    }

    #[test]
    fn fitted_window_covers_everything() {
        let r = Region::Union(vec![Region::Disk(specbound::Disk::new(c(3.0, 0.0), 1.0))]);
        let w = Window::fit(&r, &[c(-1.0, 2.0)]);
        assert!(w.re_min < -1.0 && w.re_max > 4.0 && w.im_max > 2.0 && w.im_min < -1.0);
        assert!(((w.re_max - w.re_min) - (w.im_max - w.im_min)).abs() < 1e-12);
    }
}

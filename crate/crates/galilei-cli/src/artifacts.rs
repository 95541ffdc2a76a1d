//! CSV state dumps and self-contained SVG line charts.

use galilei::wave::SuperposedState;
use num_complex::Complex64;
use std::fs;
use std::path::PathBuf;

/// Collects output files for the manifest while writing them.
pub struct Artifacts {
    dir: PathBuf,
    emit_svg: bool,
    written: Vec<String>,
}

fn format_mass(m: Complex64) -> String {
    if m.im == 0.0 {
        format!("{}", m.re)
    } else {
        format!("{}{:+}i", m.re, m.im)
    }
}

impl Artifacts {
    pub fn new(dir: &str, emit_svg: bool) -> std::io::Result<Artifacts> {
        fs::create_dir_all(dir)?;
        Ok(Artifacts {
            dir: PathBuf::from(dir),
            emit_svg,
            written: Vec::new(),
        })
    }

    pub fn written(&self) -> &[String] {
        &self.written
    }

    pub fn write_text(&mut self, name: &str, text: &str) -> std::io::Result<()> {
        fs::write(self.dir.join(name), text)?;
        self.written.push(name.to_string());
        Ok(())
    }

    /// State snapshot: columns x, then Re(ψ), Im(ψ) per channel, channels
    /// named by mass in the header.
    pub fn write_state_csv(&mut self, name: &str, state: &SuperposedState) -> std::io::Result<()> {
        let mut out = String::from("x");
        for ch in &state.channels {
            let label = format_mass(ch.mass);
            out.push_str(&format!(",re_psi[m={label}],im_psi[m={label}]"));
        }
        out.push('\n');
        for j in 0..state.grid.len() {
            out.push_str(&format!("{}", state.grid.x(j)));
            for ch in &state.channels {
                out.push_str(&format!(",{},{}", ch.amplitudes[j].re, ch.amplitudes[j].im));
            }
            out.push('\n');
        }
        self.write_text(name, &out)
    }

    /// Generic numeric table.
    pub fn write_table_csv(
        &mut self,
        name: &str,
        header: &[&str],
        rows: &[Vec<f64>],
    ) -> std::io::Result<()> {
        let mut out = header.join(",");
        out.push('\n');
        for row in rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        self.write_text(name, &out)
    }

    /// Simple polyline chart; skipped unless SVG emission is enabled.
    /// Plotting never affects pass/fail.
    pub fn write_chart(
        &mut self,
        name: &str,
        title: &str,
        series: &[(&str, &[(f64, f64)])],
    ) -> std::io::Result<()> {
        if !self.emit_svg {
            return Ok(());
        }
        let svg = render_chart(title, series);
        self.write_text(name, &svg)
    }
}

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

fn render_chart(title: &str, series: &[(&str, &[(f64, f64)])]) -> String {
    let (w, h) = (720.0, 440.0);
    let (ml, mr, mt, mb) = (70.0, 20.0, 40.0, 50.0);
    let points: Vec<(f64, f64)> = series
        .iter()
        .flat_map(|(_, pts)| pts.iter().copied())
        .collect();
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for (x, y) in &points {
        x0 = x0.min(*x);
        x1 = x1.max(*x);
        y0 = y0.min(*y);
        y1 = y1.max(*y);
    }
    if !x0.is_finite() {
        x0 = 0.0;
        x1 = 1.0;
        y0 = 0.0;
        y1 = 1.0;
    }
    if x1 == x0 {
        x1 = x0 + 1.0;
    }
    if y1 == y0 {
        y1 = y0 + 1.0;
    }
    let sx = |x: f64| ml + (x - x0) / (x1 - x0) * (w - ml - mr);
    let sy = |y: f64| h - mb - (y - y0) / (y1 - y0) * (h - mt - mb);

    let mut svg = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">
<rect width="{w}" height="{h}" fill="white"/>
<text x="{}" y="24" font-family="sans-serif" font-size="16" text-anchor="middle">{title}</text>
<line x1="{ml}" y1="{}" x2="{}" y2="{}" stroke="black"/>
<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{}" stroke="black"/>
"#,
        w / 2.0,
        h - mb,
        w - mr,
        h - mb,
        h - mb,
    );
    for frac in [0.0, 0.5, 1.0] {
        let xv = x0 + frac * (x1 - x0);
        let yv = y0 + frac * (y1 - y0);
        svg.push_str(&format!(
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11" text-anchor="middle">{xv:.3}</text>
<text x="{}" y="{}" font-family="sans-serif" font-size="11" text-anchor="end">{yv:.3e}</text>
"#,
            sx(xv),
            h - mb + 18.0,
            ml - 6.0,
            sy(yv) + 4.0,
        ));
    }
    for (i, (label, pts)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let path: Vec<String> = pts
            .iter()
            .map(|(x, y)| format!("{:.2},{:.2}", sx(*x), sy(*y)))
            .collect();
        svg.push_str(&format!(
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>
<text x="{}" y="{}" font-family="sans-serif" font-size="12" fill="{color}">{label}</text>
"#,
            path.join(" "),
            w - mr - 150.0,
            mt + 16.0 * (i + 1) as f64,
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

/// Density profile as chart points.
pub fn density_points(state: &SuperposedState, density: &[f64]) -> Vec<(f64, f64)> {
    density
        .iter()
        .enumerate()
        .map(|(j, d)| (state.grid.x(j), *d))
        .collect()
}

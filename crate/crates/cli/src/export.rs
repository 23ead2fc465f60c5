//! Sampled-grid export of a mapping as CSV.

use std::fmt::Write;

use squaremap_core::{Direction, MappingId};

pub const CSV_HEADER: &str = "x_in,y_in,x_out,y_out";

/// Maps an `n × n` grid of `[-1, 1]²` and renders one row per grid point in
/// the direction's source domain, `y` outermost and ascending. Values carry
/// 17 significant digits so that they parse back to the same `f64`.
pub fn export_grid_csv(mapping: &MappingId, direction: Direction, n: usize) -> String {
    assert!(n >= 2, "grid needs at least two samples per axis");
    let coord = |k: usize| -1.0 + 2.0 * k as f64 / (n - 1) as f64;
    let mut out = String::with_capacity(n * n * 96);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for j in 0..n {
        for i in 0..n {
            let (a, b) = (coord(i), coord(j));
            let Ok((c, d)) = mapping.map_coords(direction, a, b) else {
                continue;
            };
            writeln!(out, "{a:.16e},{b:.16e},{c:.16e},{d:.16e}").expect("writing to a String");
        }
    }
    out
}

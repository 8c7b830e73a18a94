use std::io::{self, Write};

use djc::SweepRow;

pub const HEADER: &str =
    "t,alpha,beta,re_I1,im_I1,re_I2,im_I2,re_I3,im_I3,re_I4,im_I4,re_D4,im_D4,tau4,leakage";

/// 17 significant digits in scientific notation; negative zero prints as zero.
pub fn fmt(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

pub fn row_fields(row: &SweepRow) -> [f64; 15] {
    let inv = &row.invariants;
    [
        row.t,
        row.alpha,
        row.beta,
        inv.i1.re,
        inv.i1.im,
        inv.i2.re,
        inv.i2.im,
        inv.i3.re,
        inv.i3.im,
        inv.i4.re,
        inv.i4.im,
        inv.d4.re,
        inv.d4.im,
        inv.tau4,
        row.leakage,
    ]
}

pub fn write_rows<W: Write>(mut w: W, rows: &[SweepRow]) -> io::Result<()> {
    w.write_all(HEADER.as_bytes())?;
    w.write_all(b"\n")?;
    for row in rows {
        let line: Vec<String> = row_fields(row).iter().map(|&x| fmt(x)).collect();
        w.write_all(line.join(",").as_bytes())?;
        w.write_all(b"\n")?;
    }
    w.flush()
}

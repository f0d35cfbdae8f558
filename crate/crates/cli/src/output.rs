//! Number formatting and CSV / table emission.

pub const FREQ_DECIMALS: usize = 3;
pub const DB_DECIMALS: usize = 2;
pub const GAMMA_DECIMALS: usize = 6;
pub const DISTANCE_DECIMALS: usize = 3;
pub const ANGLE_DECIMALS: usize = 2;
pub const RATE_DECIMALS: usize = 2;
pub const TABLE_DB_DECIMALS: usize = 1;

/// Fixed-point rendering with negative zero folded to zero.
pub fn fixed(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// Every row must have as many fields as `header`.
pub fn csv_string<I>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory CSV write");
    for row in rows {
        w.write_record(&row).expect("in-memory CSV write");
    }
    let bytes = w.into_inner().expect("in-memory CSV flush");
    String::from_utf8(bytes).expect("CSV fields are ASCII")
}

/// Two-column labelled table.
pub fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(l, v)| format!("{l:<width$}  {v}\n"))
        .collect()
}

//! Measurement CSV input.

use std::path::Path;

use serde::Deserialize;
use thzcoex_core::fit::MeasurementRecord;
use thzcoex_core::units::FrequencyGHz;

use crate::error::{CliError, Result};

pub const MEASUREMENT_HEADER: [&str; 6] = [
    "distance_m",
    "tx_power_dbm",
    "tx_gain_dbi",
    "rx_gain_dbi",
    "rx_power_dbm",
    "frequency_ghz",
];

#[derive(Debug, Deserialize)]
struct Row {
    distance_m: f64,
    tx_power_dbm: f64,
    tx_gain_dbi: f64,
    rx_gain_dbi: f64,
    rx_power_dbm: f64,
    frequency_ghz: f64,
}

/// Parses measurement records; the header must match [`MEASUREMENT_HEADER`] exactly.
pub fn parse_measurements(text: &str, path: &Path) -> Result<Vec<MeasurementRecord>> {
    let format = |message: String| CliError::Format {
        path: path.to_path_buf(),
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| format(e.to_string()))?;
    if header.iter().ne(MEASUREMENT_HEADER) {
        return Err(format(format!(
            "header must be `{}`, found `{}`",
            MEASUREMENT_HEADER.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut records = Vec::new();
    for row in reader.deserialize::<Row>() {
        let row = row.map_err(|e| format(e.to_string()))?;
        let rec = MeasurementRecord {
            distance_m: row.distance_m,
            tx_power_dbm: row.tx_power_dbm,
            tx_gain_dbi: row.tx_gain_dbi,
            rx_gain_dbi: row.rx_gain_dbi,
            rx_power_dbm: row.rx_power_dbm,
            frequency: FrequencyGHz::new(row.frequency_ghz)?,
        };
        rec.validate()?;
        records.push(rec);
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> &'static Path {
        Path::new("m.csv")
    }

    #[test]
    fn reads_records() {
        let text = "distance_m,tx_power_dbm,tx_gain_dbi,rx_gain_dbi,rx_power_dbm,frequency_ghz\n\
                    40,0,27,27,-30.5,142\n80,0,27,27,-37,142\n";
        let recs = parse_measurements(text, p()).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[1].distance_m, 80.0);
        assert_eq!(recs[0].frequency.ghz(), 142.0);
    }

    #[test]
    fn header_must_match() {
        let text = "distance,tx_power_dbm,tx_gain_dbi,rx_gain_dbi,rx_power_dbm,frequency_ghz\n1,0,0,0,0,142\n";
        assert!(matches!(
            parse_measurements(text, p()),
            Err(CliError::Format { .. })
        ));
    }

    #[test]
    fn bad_rows() {
        let h = MEASUREMENT_HEADER.join(",");
        assert!(matches!(
            parse_measurements(&format!("{h}\n1,0,0,0,x,142\n"), p()),
            Err(CliError::Format { .. })
        ));
        assert!(matches!(
            parse_measurements(&format!("{h}\n0,0,0,0,0,142\n"), p()),
            Err(CliError::Domain(_))
        ));
        assert!(parse_measurements(&format!("{h}\n"), p())
            .unwrap()
            .is_empty());
    }
}

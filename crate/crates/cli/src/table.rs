//! CSV input and output.

use huffseq::analysis::CorrelationProfile;
use huffseq::Grid;

/// Parses a 2D real object: one row per record, no header.
pub fn parse_object(text: &str) -> Result<Grid, String> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut values = Vec::new();
    let mut width = None;
    let mut rows = 0;
    for record in reader.records() {
        let record = record.map_err(|e| format!("object: {e}"))?;
        let row: Vec<f64> = record
            .iter()
            .map(|field| {
                field
                    .parse::<f64>()
                    .map_err(|e| format!("object row {}: `{field}`: {e}", rows + 1))
            })
            .collect::<Result<_, _>>()?;
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(format!(
                    "object row {} has {} values, expected {w}",
                    rows + 1,
                    row.len()
                ))
            }
            _ => {}
        }
        values.extend(row);
        rows += 1;
    }
    let width = width.ok_or("object: no rows")?;
    Grid::from_reals(&[rows, width], &values).map_err(|e| format!("object: {e}"))
}

pub fn object_csv(grid: &Grid) -> Result<String, String> {
    let cols = *grid.shape().last().expect("grids have rank ≥ 1");
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in grid.data().chunks(cols) {
        w.write_record(row.iter().map(|z| z.re.to_string()))
            .map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

/// `lag,re,im` rows.
pub fn profile_csv(profile: &CorrelationProfile) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["lag", "re", "im"])
        .map_err(|e| e.to_string())?;
    for (k, z) in profile.lags() {
        w.write_record([k.to_string(), z.re.to_string(), z.im.to_string()])
            .map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

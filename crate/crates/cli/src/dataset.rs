//! Dataset ingestion: a header-less numeric CSV with one sample per row and a
//! labels file with one integer per line.

use std::path::Path;

use hyperlap::SampleMatrix;

use crate::error::{CliError, Result};

#[derive(Debug, Clone)]
pub struct Dataset {
    pub samples: SampleMatrix,
    /// Class ids remapped to 0..num_classes in increasing order of the raw ids.
    pub labels: Vec<usize>,
    pub num_classes: usize,
    /// Raw id of each remapped class.
    pub class_ids: Vec<i64>,
}

fn data_err(path: &Path, line: usize, message: impl Into<String>) -> CliError {
    CliError::Data {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

pub fn read_features(path: &Path) -> Result<SampleMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::io(path, io),
            other => data_err(path, 0, format!("{other:?}")),
        })?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            data_err(path, line, e.to_string())
        })?;
        let line = record.position().map_or(rows.len() + 1, |p| p.line() as usize);
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if let Some(first) = rows.first() {
            if record.len() != first.len() {
                return Err(data_err(
                    path,
                    line,
                    format!("expected {} columns, found {}", first.len(), record.len()),
                ));
            }
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                cell.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| data_err(path, line, format!("column {}: not a finite number: {cell:?}", c + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.len() < 2 {
        return Err(data_err(path, rows.len(), "need at least two samples"));
    }
    Ok(SampleMatrix::from_rows(&rows)?)
}

pub fn read_labels(path: &Path) -> Result<Vec<i64>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let mut labels = Vec::new();
    let lines: Vec<&str> = text.lines().collect();
    let last = lines.iter().rposition(|l| !l.trim().is_empty()).map_or(0, |i| i + 1);
    for (i, l) in lines[..last].iter().enumerate() {
        let l = l.trim();
        let v = l
            .parse::<i64>()
            .map_err(|_| data_err(path, i + 1, format!("not an integer label: {l:?}")))?;
        labels.push(v);
    }
    Ok(labels)
}

pub fn load_dataset(features: &Path, labels_path: &Path) -> Result<Dataset> {
    let samples = read_features(features)?;
    let raw = read_labels(labels_path)?;
    if raw.len() != samples.nrows() {
        return Err(data_err(
            labels_path,
            raw.len(),
            format!("{} labels for {} samples in {}", raw.len(), samples.nrows(), features.display()),
        ));
    }
    let mut class_ids = raw.clone();
    class_ids.sort_unstable();
    class_ids.dedup();
    let labels = raw
        .iter()
        .map(|v| class_ids.binary_search(v).expect("id present"))
        .collect();
    Ok(Dataset {
        samples,
        labels,
        num_classes: class_ids.len(),
        class_ids,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn three_samples() {
        let x = file("0,0\n1,0\n0,1");
        let y = file("0\n0\n1\n");
        let d = load_dataset(x.path(), y.path()).unwrap();
        assert_eq!((d.samples.nrows(), d.samples.ncols()), (3, 2));
        assert_eq!(d.samples.row(1), &[1.0, 0.0]);
        assert_eq!(d.labels, vec![0, 0, 1]);
    }

    #[test]
    fn labels_are_compacted() {
        let x = file("0\n1\n2\n3\n");
        let y = file("7\n-2\n7\n30\n");
        let d = load_dataset(x.path(), y.path()).unwrap();
        assert_eq!(d.labels, vec![1, 0, 1, 2]);
        assert_eq!(d.class_ids, vec![-2, 7, 30]);
        assert_eq!(d.num_classes, 3);
    }

    #[test]
    fn ragged_row_names_the_line() {
        let x = file("0,0\n1,0\n0,1,5\n");
        match read_features(x.path()).unwrap_err() {
            CliError::Data { line, message, .. } => {
                assert_eq!(line, 3);
                assert!(message.contains("expected 2 columns"), "{message}");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn bad_cell_names_line_and_column() {
        let x = file("0,0\n1,abc\n");
        let err = read_features(x.path()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        match err {
            CliError::Data { line, message, .. } => {
                assert_eq!(line, 2);
                assert!(message.contains("column 2"), "{message}");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn count_mismatch_and_bad_label() {
        let x = file("0\n1\n2\n");
        assert!(load_dataset(x.path(), file("0\n1\n").path()).is_err());
        match read_labels(file("0\n1.5\n").path()).unwrap_err() {
            CliError::Data { line, .. } => assert_eq!(line, 2),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = read_features(Path::new("/nonexistent/x.csv")).unwrap_err();
        assert!(matches!(err, CliError::Io { .. }));
    }
}

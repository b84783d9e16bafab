#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

/// `per_class` Gaussian points around each center, labels in center order.
pub fn blobs(seed: u64, centers: &[Vec<f64>], per_class: usize, sigma: f64) -> (Vec<Vec<f64>>, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, sigma).unwrap();
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (c, center) in centers.iter().enumerate() {
        for _ in 0..per_class {
            rows.push(center.iter().map(|m| m + noise.sample(&mut rng)).collect());
            labels.push(c);
        }
    }
    (rows, labels)
}

/// Three 3-D blobs, centers pairwise at least 10 apart, 20 points each.
pub fn three_blobs(seed: u64) -> (Vec<Vec<f64>>, Vec<usize>) {
    let centers = vec![vec![0.0, 0.0, 0.0], vec![10.0, 0.0, 0.0], vec![0.0, 10.0, 0.0]];
    blobs(seed, &centers, 20, 0.1)
}

pub fn write_dataset(dir: &Path, name: &str, rows: &[Vec<f64>], labels: &[usize]) -> (PathBuf, PathBuf) {
    let x = dir.join(format!("{name}.csv"));
    let y = dir.join(format!("{name}.labels"));
    let mut f = std::fs::File::create(&x).unwrap();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
        writeln!(f, "{}", cells.join(",")).unwrap();
    }
    let mut f = std::fs::File::create(&y).unwrap();
    for l in labels {
        writeln!(f, "{l}").unwrap();
    }
    (x, y)
}

pub fn write_config(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

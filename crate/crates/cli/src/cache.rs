//! On-disk cache of KL polynomials, one file per key.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use kmchar_core::hecke::ResidueClass;
use kmchar_core::laurent::LaurentPoly;
use kmchar_core::weyl::WeylElement;
use kmchar_core::CartanDatum;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    P,
    Q,
}

/// Hex SHA-256 over the matrix, the residue class of `lambda`, both elements and the kind.
///
/// Elements enter through their canonical forms, so two words for the same
/// element share an entry.
pub fn key(
    datum: &CartanDatum,
    class: &ResidueClass,
    x: &WeylElement,
    y: &WeylElement,
    kind: PolyKind,
) -> String {
    let matrix = datum
        .matrix()
        .iter()
        .map(|row| {
            row.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";");
    let kind = match kind {
        PolyKind::P => "P",
        PolyKind::Q => "Q",
    };
    let text = format!(
        "matrix:{matrix}\nclass:{class}\nx:{}\ny:{}\nkind:{kind}\n",
        x.canon(),
        y.canon()
    );
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// A cache directory that switches itself off after the first IO failure.
#[derive(Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    warnings: Vec<String>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self {
            dir,
            warnings: Vec::new(),
        }
    }

    pub fn disabled() -> Self {
        Self::new(None)
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    pub fn take_warnings(&mut self) -> Vec<String> {
        std::mem::take(&mut self.warnings)
    }

    fn fail(&mut self, what: &str, err: io::Error) {
        if let Some(dir) = self.dir.take() {
            self.warnings.push(format!(
                "warning: cache {} disabled after {what} failed: {err}",
                dir.display()
            ));
        }
    }

    /// `None` on a miss or an unreadable entry; corrupt entries are treated as misses.
    pub fn get(&mut self, key: &str) -> Option<LaurentPoly> {
        let path = self.dir.as_ref()?.join(key);
        match fs::read(&path) {
            Ok(bytes) => decode(&bytes),
            Err(e) if e.kind() == io::ErrorKind::NotFound => None,
            Err(e) => {
                self.fail("read", e);
                None
            }
        }
    }

    pub fn put(&mut self, key: &str, poly: &LaurentPoly) {
        let Some(dir) = self.dir.clone() else {
            return;
        };
        if let Err(e) = write_atomic(&dir, key, format!("{poly}\n").as_bytes()) {
            self.fail("write", e);
        }
    }
}

fn decode(bytes: &[u8]) -> Option<LaurentPoly> {
    let text = std::str::from_utf8(bytes).ok()?;
    let body = text.strip_suffix('\n')?;
    let poly = LaurentPoly::parse(body)?;
    (poly.to_string() == body).then_some(poly)
}

fn write_atomic(dir: &Path, key: &str, bytes: &[u8]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".{key}.{}.tmp", std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, dir.join(key))
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

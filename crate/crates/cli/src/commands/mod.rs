mod compress;
mod convergence;
mod entropy;
mod generate;
mod verify;

use std::path::Path;

use entropy_lab::{ingest, Alphabet, AlphabetMode, MemoryCap, Sequence};

use crate::args::AlphabetArg;
use crate::error::{CliError, CliResult};

pub use compress::{compress, decompress};
pub use convergence::convergence;
pub use entropy::entropy;
pub use generate::generate;
pub use verify::verify;

pub fn alphabet_mode(arg: &AlphabetArg) -> CliResult<AlphabetMode> {
    match arg.alphabet.as_str() {
        "inferred" => Ok(AlphabetMode::Inferred),
        "bytes" => Ok(AlphabetMode::Bytes),
        path => {
            let text = std::fs::read(path).map_err(CliError::io(path))?;
            let alphabet = Alphabet::parse_declaration(&text).map_err(|e| CliError::input(path, e))?;
            Ok(AlphabetMode::Explicit(alphabet))
        }
    }
}

pub fn read_file(path: &Path) -> CliResult<Vec<u8>> {
    std::fs::read(path).map_err(CliError::io(path))
}

/// Read and ingest a non-empty input file.
pub fn load(path: &Path, mode: &AlphabetMode) -> CliResult<Sequence> {
    let bytes = read_file(path)?;
    if bytes.is_empty() {
        return Err(CliError::input(path, "empty input"));
    }
    ingest(&bytes, mode).map_err(|e| CliError::input(path, e))
}

pub fn display(path: &Path) -> String {
    path.display().to_string()
}

/// Memory budget from `ENTROPY_LAB_MEM_CAP` (bytes, optional K/M/G suffix
/// in powers of 1024), or the default.
pub fn memory_cap() -> CliResult<MemoryCap> {
    let Ok(raw) = std::env::var("ENTROPY_LAB_MEM_CAP") else {
        return Ok(MemoryCap::default());
    };
    parse_mem_cap(&raw).ok_or_else(|| CliError::Usage(format!("ENTROPY_LAB_MEM_CAP: cannot parse `{raw}` as a byte count")))
}

fn parse_mem_cap(raw: &str) -> Option<MemoryCap> {
    let t = raw.trim();
    let (digits, shift) = match t.char_indices().last()? {
        (i, 'k' | 'K') => (&t[..i], 10),
        (i, 'm' | 'M') => (&t[..i], 20),
        (i, 'g' | 'G') => (&t[..i], 30),
        _ => (t, 0),
    };
    let value: u64 = digits.trim().parse().ok()?;
    value.checked_mul(1 << shift).map(MemoryCap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn memory_cap_syntax() {
        assert_eq!(parse_mem_cap("1000"), Some(MemoryCap(1000)));
        assert_eq!(parse_mem_cap("4k"), Some(MemoryCap(4096)));
        assert_eq!(parse_mem_cap("2G"), Some(MemoryCap(2 << 30)));
        assert_eq!(parse_mem_cap(" 3 M "), Some(MemoryCap(3 << 20)));
        assert_eq!(parse_mem_cap("lots"), None);
        assert_eq!(parse_mem_cap(""), None);
        assert_eq!(parse_mem_cap("99999999999999G"), None);
    }
}

use serde::{Deserialize, Serialize};

use crate::entropy::fit_markov;
use crate::generators::{champernowne_digits, copeland_erdos_digits, de_bruijn, markov_sample, MarkovSample};
use crate::{Error, MemoryCap, Result, Sequence, Symbol};

/// Parameters of one generator run, serializable as a small config file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    DeBruijn {
        sigma: usize,
        k: usize,
    },
    Champernowne {
        base: usize,
        n: usize,
    },
    CopelandErdos {
        base: usize,
        n: usize,
    },
    /// Sample from the order-`k` model fitted to a corpus supplied at run time.
    MarkovSample {
        k: usize,
        n: usize,
        seed: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        start: Option<String>,
    },
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GeneratorSpec::DeBruijn { sigma, k } => {
                if sigma < 2 {
                    return Err(Error::param("sigma", "must be at least 2"));
                }
                if k < 1 {
                    return Err(Error::param("k", "must be at least 1"));
                }
            }
            GeneratorSpec::Champernowne { base, n } | GeneratorSpec::CopelandErdos { base, n } => {
                if base < 2 {
                    return Err(Error::param("base", "must be at least 2"));
                }
                if n < 1 {
                    return Err(Error::param("n", "must be at least 1"));
                }
            }
            GeneratorSpec::MarkovSample { n, .. } => {
                if n < 1 {
                    return Err(Error::param("n", "must be at least 1"));
                }
            }
        }
        Ok(())
    }

    /// Run the generator. `corpus` is required for Markov sampling and
    /// ignored otherwise.
    pub fn generate(&self, corpus: Option<&Sequence>, cap: MemoryCap) -> Result<MarkovSample> {
        self.validate()?;
        match *self {
            GeneratorSpec::Champernowne { n, .. }
            | GeneratorSpec::CopelandErdos { n, .. }
            | GeneratorSpec::MarkovSample { n, .. } => cap.check_length(n)?,
            GeneratorSpec::DeBruijn { .. } => {}
        }
        let plain = |sequence| MarkovSample {
            sequence,
            restarts: Vec::new(),
        };
        match self {
            GeneratorSpec::DeBruijn { sigma, k } => de_bruijn(*sigma, *k, cap).map(plain),
            GeneratorSpec::Champernowne { base, n } => champernowne_digits(*base, *n).map(plain),
            GeneratorSpec::CopelandErdos { base, n } => copeland_erdos_digits(*base, *n).map(plain),
            GeneratorSpec::MarkovSample { k, n, seed, start } => {
                let corpus = corpus.ok_or(Error::param("corpus", "Markov sampling needs a corpus"))?;
                let model = fit_markov(corpus, *k)?;
                let start: Option<Vec<Symbol>> = start
                    .as_ref()
                    .map(|text| {
                        text.bytes()
                            .enumerate()
                            .map(|(offset, byte)| {
                                corpus
                                    .alphabet()
                                    .index_of(byte)
                                    .ok_or(Error::UndeclaredSymbol { byte, offset })
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .transpose()?;
                markov_sample(&model, *n, *seed, start.as_deref())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ingest, AlphabetMode};

    #[test]
    fn validation() {
        assert!(GeneratorSpec::DeBruijn { sigma: 1, k: 2 }.validate().is_err());
        assert!(GeneratorSpec::DeBruijn { sigma: 2, k: 0 }.validate().is_err());
        assert!(GeneratorSpec::Champernowne { base: 1, n: 3 }.validate().is_err());
        assert!(GeneratorSpec::CopelandErdos { base: 10, n: 0 }.validate().is_err());
        assert!(GeneratorSpec::Champernowne { base: 10, n: 3 }.validate().is_ok());
    }

    #[test]
    fn generate_each_kind() {
        let cap = MemoryCap::DEFAULT;
        let db = GeneratorSpec::DeBruijn { sigma: 2, k: 10 }.generate(None, cap).unwrap();
        assert_eq!(db.sequence.len(), 1033);
        let ch = GeneratorSpec::Champernowne { base: 10, n: 12 }.generate(None, cap).unwrap();
        assert_eq!(ch.sequence.to_bytes(), b"123456789101");
        let ce = GeneratorSpec::CopelandErdos { base: 10, n: 8 }.generate(None, cap).unwrap();
        assert_eq!(ce.sequence.to_bytes(), b"23571113");
        let corpus = ingest(b"TORONTO", &AlphabetMode::Inferred).unwrap();
        let spec = GeneratorSpec::MarkovSample {
            k: 2,
            n: 7,
            seed: 5,
            start: Some("TO".into()),
        };
        assert_eq!(spec.generate(Some(&corpus), cap).unwrap().sequence.to_bytes(), b"TORONTO");
        assert!(spec.generate(None, cap).is_err());
        let huge = GeneratorSpec::Champernowne { base: 10, n: 1 << 40 };
        assert!(matches!(huge.generate(None, cap), Err(Error::CapExceeded { .. })));
        let bad_start = GeneratorSpec::MarkovSample {
            k: 2,
            n: 7,
            seed: 5,
            start: Some("TX".into()),
        };
        assert!(matches!(
            bad_start.generate(Some(&corpus), cap),
            Err(Error::UndeclaredSymbol { byte: b'X', offset: 1 })
        ));
    }
}

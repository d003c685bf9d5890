//! Move-to-front coding over `0..sigma`, initial list in index order.

use crate::{Error, Result, Symbol};

pub fn mtf(symbols: &[Symbol], sigma: usize) -> Result<Vec<Symbol>> {
    let mut list: Vec<Symbol> = (0..sigma as Symbol).collect();
    symbols
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let rank = list.iter().position(|&x| x == c).ok_or(Error::SymbolOutOfRange {
                symbol: c,
                position: i,
                sigma,
            })?;
            list[..=rank].rotate_right(1);
            Ok(rank as Symbol)
        })
        .collect()
}

pub fn imtf(ranks: &[Symbol], sigma: usize) -> Result<Vec<Symbol>> {
    let mut list: Vec<Symbol> = (0..sigma as Symbol).collect();
    ranks
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let r = r as usize;
            if r >= sigma {
                return Err(Error::malformed("mtf", i as u64, format!("rank {r} outside alphabet of size {sigma}")));
            }
            let c = list[r];
            list[..=r].rotate_right(1);
            Ok(c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(mtf(&[0, 0, 0, 0], 1).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(mtf(&[1, 0], 2).unwrap(), vec![1, 1]);
        assert_eq!(mtf(&[2, 2, 0, 1, 1], 3).unwrap(), vec![2, 0, 1, 2, 0]);
        assert!(mtf(&[3], 3).is_err());
        assert!(matches!(imtf(&[0, 5], 3), Err(Error::Malformed { bit_offset: 1, .. })));
    }

    proptest! {
        #[test]
        fn roundtrip(sigma in 1usize..10, raw in proptest::collection::vec(0u32..1000, 0..200)) {
            let symbols: Vec<Symbol> = raw.iter().map(|&x| x % sigma as u32).collect();
            let ranks = mtf(&symbols, sigma).unwrap();
            prop_assert!(ranks.iter().all(|&r| (r as usize) < sigma));
            prop_assert_eq!(imtf(&ranks, sigma).unwrap(), symbols);
        }
    }
}

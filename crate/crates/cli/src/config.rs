//! Parsed-and-validated run configuration: family selectors and inclusive
//! vertex-count ranges.

use crate::CliError;
use bichroma::graphs::TwoTreeSeq;
use bichroma::spectra::Family;
use std::fmt;
use std::str::FromStr;

/// Inclusive vertex-count range; a bare integer is a one-element range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub start: usize,
    pub end: usize,
}

impl NRange {
    pub fn single(n: usize) -> Self {
        NRange { start: n, end: n }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |p: &str| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad vertex count {p:?}: {e}"))
        };
        let range = match s.split_once("..") {
            Some((a, b)) => NRange {
                start: parse(a)?,
                end: parse(b)?,
            },
            None => NRange::single(parse(s)?),
        };
        if range.start > range.end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(range)
    }
}

/// Which graphs a spectrum or poly run is about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySel {
    Theta,
    Fan,
    Seq(TwoTreeSeq),
}

impl FamilySel {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "theta" => Ok(FamilySel::Theta),
            "fan" => Ok(FamilySel::Fan),
            _ => {
                if let Some(body) = s.strip_prefix("seq:") {
                    let seq: TwoTreeSeq = body
                        .parse()
                        .map_err(|e| CliError::usage(format!("--family: {e}")))?;
                    Ok(FamilySel::Seq(seq))
                } else {
                    Err(CliError::usage(format!(
                        "--family: expected `theta`, `fan`, or `seq:<n;u-v;...>`, got {s:?}"
                    )))
                }
            }
        }
    }

    pub fn tag(&self) -> Family {
        match self {
            FamilySel::Theta => Family::Theta,
            FamilySel::Fan => Family::Fan,
            FamilySel::Seq(_) => Family::TwoTree,
        }
    }

    /// Resolves the `--n` flag against the selector: required for theta/fan,
    /// optional but consistency-checked for seq families.
    pub fn resolve_range(&self, n: Option<NRange>) -> Result<NRange, CliError> {
        match self {
            FamilySel::Theta | FamilySel::Fan => {
                let range = n.ok_or_else(|| CliError::usage("--n: required for theta/fan"))?;
                if range.start < 3 {
                    return Err(CliError::usage(format!(
                        "--n: these families need n >= 3, got {}",
                        range.start
                    )));
                }
                Ok(range)
            }
            FamilySel::Seq(seq) => {
                let own = NRange::single(seq.n());
                match n {
                    None => Ok(own),
                    Some(r) if r == own => Ok(own),
                    Some(r) => Err(CliError::usage(format!(
                        "--n: sequence declares n={}, got {r}",
                        seq.n()
                    ))),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nrange_parsing() {
        assert_eq!("5".parse::<NRange>().unwrap(), NRange::single(5));
        assert_eq!(
            "3..10".parse::<NRange>().unwrap(),
            NRange { start: 3, end: 10 }
        );
        assert!("10..3".parse::<NRange>().is_err());
        assert!("x..3".parse::<NRange>().is_err());
        assert!("".parse::<NRange>().is_err());
        assert_eq!(NRange { start: 3, end: 10 }.to_string(), "3..10");
    }

    #[test]
    fn family_parsing() {
        assert_eq!(FamilySel::parse("theta").unwrap(), FamilySel::Theta);
        assert_eq!(FamilySel::parse("fan").unwrap(), FamilySel::Fan);
        let seq = FamilySel::parse("seq:5;0-1;0-1").unwrap();
        assert_eq!(seq, FamilySel::Seq(TwoTreeSeq::theta(5).unwrap()));
        assert!(FamilySel::parse("wheel").is_err());
        assert!(FamilySel::parse("seq:4;9-9").is_err());
    }

    #[test]
    fn range_resolution() {
        let theta = FamilySel::parse("theta").unwrap();
        assert!(theta.resolve_range(None).is_err());
        assert!(theta.resolve_range(Some(NRange::single(2))).is_err());
        let seq = FamilySel::parse("seq:4;0-1").unwrap();
        assert_eq!(seq.resolve_range(None).unwrap(), NRange::single(4));
        assert!(seq.resolve_range(Some(NRange::single(5))).is_err());
    }
}

//! Plain-text profile files:
//!
//! ```text
//! # comment
//! alternatives: x y z
//! voter: x > y > z
//! voter: z > y > x
//! ```

use super::{AlternativeSet, StrictProfile};
use crate::error::{Error, Result};

pub fn parse_profile(text: &str) -> Result<StrictProfile> {
    let mut alts: Option<AlternativeSet> = None;
    let mut rankings: Vec<Vec<&str>> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::Parse {
            line: line_no,
            reason,
        };
        let (key, rest) = line.split_once(':').ok_or_else(|| {
            err(format!(
                "expected `alternatives:` or `voter:`, got `{line}`"
            ))
        })?;
        match key.trim() {
            "alternatives" => {
                if alts.is_some() {
                    return Err(err("alternatives declared twice".into()));
                }
                let set =
                    AlternativeSet::new(rest.split_whitespace()).map_err(|e| err(e.to_string()))?;
                alts = Some(set);
            }
            "voter" => {
                if alts.is_none() {
                    return Err(err("`voter:` before `alternatives:`".into()));
                }
                let ranking: Vec<&str> = rest.split('>').map(str::trim).collect();
                if ranking.iter().any(|l| l.is_empty()) {
                    return Err(err("empty position in ranking".into()));
                }
                rankings.push(ranking);
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }

    let alts = alts.ok_or(Error::Parse {
        line: 0,
        reason: "missing `alternatives:` line".into(),
    })?;
    StrictProfile::from_labels(alts, &rankings)
}

impl std::str::FromStr for StrictProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_profile(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_loose_spacing() {
        let text = "# example\nalternatives: x y z w\n\nvoter: x>y > z >w\nvoter:y > z > w > x\n";
        let p = parse_profile(text).unwrap();
        assert_eq!(p.voters(), 2);
        assert_eq!(p.label(p.top(1)), "y");
        assert_eq!(parse_profile(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            parse_profile("voter: x > y"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_profile("alternatives: x y\nvoter: x > x"),
            Err(Error::Ranking { .. })
        ));
        assert!(matches!(
            parse_profile("alternatives: x y\nvoter: x > q"),
            Err(Error::Ranking { .. })
        ));
        assert!(matches!(
            parse_profile("alternatives: x y\n"),
            Err(Error::NoVoters)
        ));
        assert!(matches!(
            parse_profile("alternatives: x y\nballot: x > y"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_profile("").is_err());
    }
}

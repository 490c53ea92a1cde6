//! Textual object specifications.
//!
//! A single object is `"a,b"`; a list is `"a1,b1;a2,b2;..."`. Whitespace is
//! ignored. Lists may also be given as JSON, `[[a1,b1],[a2,b2],...]`, which
//! is the shape `enumerate --format json` prints for each object.

use tube_cluster::{TubeObject, TubeRank};

use crate::CliError;

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn coordinates(rank: TubeRank, a: i64, b: i64) -> Result<TubeObject, CliError> {
    let a = u32::try_from(a).map_err(|_| CliError::Usage(format!("bad first coordinate {a}")))?;
    let b = u32::try_from(b).map_err(|_| CliError::Usage(format!("bad quasi-length {b}")))?;
    Ok(TubeObject::new(rank, a, b)?)
}

pub fn parse_object(rank: TubeRank, s: &str) -> Result<TubeObject, CliError> {
    let s = strip_ws(s);
    if s.starts_with('[') {
        let [a, b]: [i64; 2] = serde_json::from_str(&s)
            .map_err(|e| CliError::Usage(format!("cannot parse object {s:?}: {e}")))?;
        return coordinates(rank, a, b);
    }
    let (a, b) = s.split_once(',').ok_or_else(|| CliError::Usage(format!("expected \"a,b\", got {s:?}")))?;
    let parse = |t: &str| t.parse::<i64>().map_err(|_| CliError::Usage(format!("not an integer: {t:?}")));
    coordinates(rank, parse(a)?, parse(b)?)
}

/// Objects in the order written.
pub fn parse_list(rank: TubeRank, s: &str) -> Result<Vec<TubeObject>, CliError> {
    let s = strip_ws(s);
    if s.starts_with('[') {
        let pairs: Vec<[i64; 2]> = serde_json::from_str(&s)
            .map_err(|e| CliError::Usage(format!("cannot parse object list {s:?}: {e}")))?;
        return pairs.into_iter().map(|[a, b]| coordinates(rank, a, b)).collect();
    }
    s.split(';').filter(|t| !t.is_empty()).map(|t| parse_object(rank, t)).collect()
}

pub fn format_object(x: &TubeObject) -> String {
    format!("{},{}", x.a(), x.b())
}

pub fn format_list(xs: &[TubeObject]) -> String {
    xs.iter().map(format_object).collect::<Vec<_>>().join(";")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: u32) -> TubeRank {
        TubeRank::new(n).unwrap()
    }

    #[test]
    fn single_objects() {
        let r = rank(3);
        assert_eq!(parse_object(r, " 1 , 2 ").unwrap(), TubeObject::new(r, 1, 2).unwrap());
        assert_eq!(parse_object(r, "[3,5]").unwrap(), TubeObject::new(r, 3, 5).unwrap());
        assert!(parse_object(r, "4,1").is_err());
        assert!(parse_object(r, "1,0").is_err());
        assert!(parse_object(r, "1;2").is_err());
        assert!(parse_object(r, "x,2").is_err());
        assert!(parse_object(r, "-1,2").is_err());
    }

    #[test]
    fn lists() {
        let r = rank(3);
        let want = vec![TubeObject::new(r, 1, 2).unwrap(), TubeObject::new(r, 1, 1).unwrap()];
        assert_eq!(parse_list(r, "1,2; 1,1").unwrap(), want);
        assert_eq!(parse_list(r, "[[1,2],[1,1]]").unwrap(), want);
        assert_eq!(parse_list(r, "1,2;1,1;").unwrap(), want);
        assert_eq!(format_list(&want), "1,2;1,1");
        assert!(parse_list(r, "").unwrap().is_empty());
        assert!(parse_list(r, "[[1,2,3]]").is_err());
    }
}

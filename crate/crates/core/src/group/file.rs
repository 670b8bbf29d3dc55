use std::path::Path;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};

/// Parses the catalog text format: a `degree n` line followed by one
/// generator per line in cycle notation. Blank lines and `#` comments are
/// skipped.
pub fn parse_group_file(text: &str, source_name: &str) -> Result<PermGroup> {
    let parse_err = |line: usize, message: String| Error::Parse {
        source_name: source_name.to_string(),
        line,
        message,
    };
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| parse_err(line_no, "expected `degree n`".into()))?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad degree {:?}", rest.trim())))?;
                if n == 0 || n > u16::MAX as usize {
                    return Err(parse_err(line_no, format!("degree {n} out of range")));
                }
                degree = Some(n);
            }
            Some(n) => {
                let g = Perm::parse_cycles(line, n).map_err(|e| parse_err(line_no, e.to_string()))?;
                gens.push(g);
            }
        }
    }
    let n = degree.ok_or_else(|| parse_err(0, "missing `degree n` line".into()))?;
    PermGroup::generate(n, &gens)
}

pub fn read_group_file(path: impl AsRef<Path>) -> Result<PermGroup> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    parse_group_file(&text, &path.display().to_string())
}

pub fn write_group_file(group: &PermGroup, path: impl AsRef<Path>) -> Result<()> {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    std::fs::write(path, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_group_file("# S3\ndegree 3\n(1 2 3)\n\n(1 2)\n", "s3").unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn trivial_group_has_no_generator_lines() {
        assert_eq!(parse_group_file("degree 1\n", "t").unwrap().order(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_group_file("degree 3\n(1 2 3)\n(1 5)\n", "bad") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_group_file("(1 2)\n", "nodeg").is_err());
    }

    #[test]
    fn write_then_read() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("d8.txt");
        let g = parse_group_file("degree 4\n(1 2 3 4)\n(1 3)\n", "d8").unwrap();
        write_group_file(&g, &path).unwrap();
        assert_eq!(read_group_file(&path).unwrap(), g);
    }
}

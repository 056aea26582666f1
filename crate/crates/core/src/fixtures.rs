//! Bundled input files, addressable by name.

use crate::error::{Error, Result};
use crate::format::parse_algebra;
use crate::lie::LieSuperAlgebra;

pub const FILES: &[(&str, &str)] = &[
    ("gl11.alg", include_str!("../fixtures/gl11.alg")),
    ("gl22.alg", include_str!("../fixtures/gl22.alg")),
    ("sl2.alg", include_str!("../fixtures/sl2.alg")),
    ("sec10.alg", include_str!("../fixtures/sec10.alg")),
    ("nonabelian2.alg", include_str!("../fixtures/nonabelian2.alg")),
    ("notalg.kac", include_str!("../fixtures/notalg.kac")),
    ("inner2.kac", include_str!("../fixtures/inner2.kac")),
    ("sec8.coaction", include_str!("../fixtures/sec8.coaction")),
    ("a.mat", include_str!("../fixtures/a.mat")),
];

/// The structural fixture set.
pub const ALGEBRAS: &[&str] = &["gl11", "gl22", "sl2", "sec10", "nonabelian2"];

/// Contents of a bundled file, by file name with or without extension.
pub fn file(name: &str) -> Option<&'static str> {
    FILES
        .iter()
        .find(|(f, _)| *f == name || f.split('.').next() == Some(name))
        .map(|(_, text)| *text)
}

pub fn algebra(name: &str) -> Result<LieSuperAlgebra> {
    let text = file(name).ok_or_else(|| Error::Precondition(format!("no bundled algebra named '{name}'")))?;
    parse_algebra(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::write_algebra;
    use crate::lie::{make_gl, make_sl2, nonabelian_2d, section10_algebra};

    #[test]
    fn files_match_constructors() {
        assert_eq!(algebra("gl11").unwrap(), make_gl(1, 1).with_name("gl(1|1)"));
        assert_eq!(algebra("gl22").unwrap(), make_gl(2, 2).with_name("gl(2|2)"));
        assert_eq!(algebra("sl2").unwrap(), make_sl2());
        assert_eq!(algebra("sec10").unwrap(), section10_algebra());
        assert_eq!(algebra("nonabelian2").unwrap(), nonabelian_2d());
    }

    #[test]
    fn round_trip() {
        for name in ALGEBRAS {
            let l = algebra(name).unwrap();
            assert_eq!(parse_algebra(&write_algebra(&l)).unwrap(), l);
        }
    }
}

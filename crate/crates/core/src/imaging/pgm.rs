//! Netpbm PGM reader/writer, P2 (ASCII) and P5 (binary), maxval <= 255.

use std::fs;
use std::io::Write;
use std::path::Path;

use super::GrayImage;
use crate::error::{Error, Result};

/// Reads a P2 or P5 PGM file. Only `maxval <= 255` images are accepted.
pub fn read_pgm(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    parse_pgm(&bytes)
}

/// Writes `image` as PGM: binary P5 when `binary` is set, ASCII P2 otherwise.
pub fn write_pgm(image: &GrayImage, path: impl AsRef<Path>, binary: bool) -> Result<()> {
    let path = path.as_ref();
    let mut out = Vec::new();
    if binary {
        write!(out, "P5\n{} {}\n255\n", image.width(), image.height()).expect("vec write");
        out.extend_from_slice(image.pixels());
    } else {
        write!(out, "P2\n{} {}\n255\n", image.width(), image.height()).expect("vec write");
        for row in image.pixels().chunks(image.width()) {
            let line: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(out, "{}", line.join(" ")).expect("vec write");
        }
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

fn parse_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let mut cursor = 0usize;
    let magic = read_token(bytes, &mut cursor)
        .ok_or_else(|| Error::PgmFormat("missing magic number".into()))?;
    let binary = match magic.as_str() {
        "P2" => false,
        "P5" => true,
        other => {
            return Err(Error::PgmFormat(format!(
                "unsupported magic number '{other}' (want P2 or P5)"
            )))
        }
    };

    let width = read_number(bytes, &mut cursor, "width")?;
    let height = read_number(bytes, &mut cursor, "height")?;
    let maxval = read_number(bytes, &mut cursor, "maxval")?;
    if width == 0 || height == 0 {
        return Err(Error::PgmFormat("zero image dimension".into()));
    }
    if maxval == 0 || maxval > 255 {
        return Err(Error::PgmFormat(format!(
            "maxval {maxval} out of supported range [1, 255]"
        )));
    }

    let count = width * height;
    let pixels = if binary {
        // Exactly one whitespace byte separates the header from raster data.
        if cursor + count > bytes.len() {
            return Err(Error::PgmFormat(format!(
                "raster truncated: need {count} bytes, found {}",
                bytes.len().saturating_sub(cursor)
            )));
        }
        bytes[cursor..cursor + count].to_vec()
    } else {
        let mut pixels = Vec::with_capacity(count);
        for _ in 0..count {
            pixels.push(read_number(bytes, &mut cursor, "pixel")? as u8);
        }
        pixels
    };

    if let Some(&bad) = pixels.iter().find(|&&p| p as usize > maxval) {
        return Err(Error::PgmFormat(format!(
            "pixel value {bad} exceeds declared maxval {maxval}"
        )));
    }
    GrayImage::new(width, height, pixels)
}

/// Next whitespace-delimited token, skipping `#` comments. Advances `cursor`
/// past the single whitespace byte that terminates the token.
fn read_token(bytes: &[u8], cursor: &mut usize) -> Option<String> {
    loop {
        while *cursor < bytes.len() && bytes[*cursor].is_ascii_whitespace() {
            *cursor += 1;
        }
        if *cursor < bytes.len() && bytes[*cursor] == b'#' {
            while *cursor < bytes.len() && bytes[*cursor] != b'\n' {
                *cursor += 1;
            }
            continue;
        }
        break;
    }
    if *cursor >= bytes.len() {
        return None;
    }
    let start = *cursor;
    while *cursor < bytes.len() && !bytes[*cursor].is_ascii_whitespace() {
        *cursor += 1;
    }
    let token = String::from_utf8_lossy(&bytes[start..*cursor]).into_owned();
    if *cursor < bytes.len() {
        *cursor += 1; // consume the terminating whitespace byte
    }
    Some(token)
}

fn read_number(bytes: &[u8], cursor: &mut usize, what: &str) -> Result<usize> {
    let token =
        read_token(bytes, cursor).ok_or_else(|| Error::PgmFormat(format!("missing {what}")))?;
    token
        .parse::<usize>()
        .map_err(|_| Error::PgmFormat(format!("invalid {what} '{token}'")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ascii_zero_image() {
        let img = parse_pgm(b"P2 2 2 255 0 0 0 0").unwrap();
        assert_eq!(img.width(), 2);
        assert_eq!(img.height(), 2);
        assert_eq!(img.pixels(), &[0, 0, 0, 0]);
    }

    #[test]
    fn parses_comments() {
        let img = parse_pgm(b"P2\n# a comment\n2 1\n# another\n255\n7 9\n").unwrap();
        assert_eq!(img.pixels(), &[7, 9]);
    }

    #[test]
    fn rejects_wide_maxval() {
        let err = parse_pgm(b"P2 1 1 65535 0").unwrap_err();
        assert!(matches!(err, Error::PgmFormat(_)));
    }

    #[test]
    fn rejects_bad_magic() {
        assert!(parse_pgm(b"P3 1 1 255 0 0 0").is_err());
    }

    #[test]
    fn rejects_truncated_binary_raster() {
        let mut data = b"P5\n2 2\n255\n".to_vec();
        data.extend_from_slice(&[1, 2, 3]); // one byte short
        assert!(parse_pgm(&data).is_err());
    }

    #[test]
    fn rejects_pixel_above_maxval() {
        assert!(parse_pgm(b"P2 1 2 100 50 101").is_err());
    }

    #[test]
    fn binary_round_trip_is_pixel_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ramp.pgm");
        let img = GrayImage::from_fn(3, 3, |r, c| (r * 3 + c) as u8 * 31).unwrap();
        write_pgm(&img, &path, true).unwrap();
        assert_eq!(read_pgm(&path).unwrap(), img);
    }

    #[test]
    fn ascii_round_trip_is_pixel_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("plain.pgm");
        let img = GrayImage::new(2, 2, vec![0, 255, 17, 96]).unwrap();
        write_pgm(&img, &path, false).unwrap();
        assert_eq!(read_pgm(&path).unwrap(), img);
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            read_pgm("/nonexistent/definitely/missing.pgm"),
            Err(Error::Io { .. })
        ));
    }
}

//! Cycle notation: `(1 2 3)(4 5)`, 1-based, `()` for the identity.
//!
//! Points may be separated by whitespace or commas; whitespace between
//! cycles is ignored. A single-point cycle such as `(3)` denotes a fixed point.

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleParseError {
    #[error("point {point} repeated at byte {pos}")]
    RepeatedPoint { point: usize, pos: usize },
    #[error("point {point} at byte {pos} is outside 1..={degree}")]
    PointOutOfRange {
        point: usize,
        degree: usize,
        pos: usize,
    },
    #[error("malformed cycle notation at byte {pos}: {reason}")]
    Malformed { pos: usize, reason: &'static str },
}

pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation, CycleParseError> {
    let bytes = text.as_bytes();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut pos = 0;
    let mut cycles = 0;

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(CycleParseError::Malformed {
                pos,
                reason: "expected '('",
            });
        }
        pos += 1;
        cycles += 1;
        let mut cycle: Vec<u32> = Vec::new();
        let mut need_sep = false;
        loop {
            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Err(CycleParseError::Malformed {
                    pos,
                    reason: "unclosed '('",
                });
            }
            match bytes[pos] {
                b')' => {
                    pos += 1;
                    break;
                }
                b',' => {
                    if cycle.is_empty() || !need_sep {
                        return Err(CycleParseError::Malformed {
                            pos,
                            reason: "unexpected ','",
                        });
                    }
                    need_sep = false;
                    pos += 1;
                }
                b'0'..=b'9' => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let point: usize =
                        text[start..pos]
                            .parse()
                            .map_err(|_| CycleParseError::Malformed {
                                pos: start,
                                reason: "point too large",
                            })?;
                    if point == 0 || point > degree {
                        return Err(CycleParseError::PointOutOfRange {
                            point,
                            degree,
                            pos: start,
                        });
                    }
                    if used[point - 1] {
                        return Err(CycleParseError::RepeatedPoint { point, pos: start });
                    }
                    used[point - 1] = true;
                    cycle.push((point - 1) as u32);
                    need_sep = true;
                }
                _ => {
                    return Err(CycleParseError::Malformed {
                        pos,
                        reason: "unexpected character",
                    })
                }
            }
        }
        for (k, &p) in cycle.iter().enumerate() {
            images[p as usize] = cycle[(k + 1) % cycle.len()];
        }
    }
    if cycles == 0 {
        return Err(CycleParseError::Malformed {
            pos: 0,
            reason: "empty input",
        });
    }
    Ok(Permutation::from_images(images).expect("disjoint cycles form a bijection"))
}

/// Canonical cycle notation; identical to the `Display` impl.
pub fn format_permutation(p: &Permutation) -> String {
    p.to_string()
}

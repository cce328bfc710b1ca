//! The nine-symbol instruction alphabet.

use std::fmt;

use crate::error::{Error, Result};

/// One instruction.
///
/// Variants are declared in canonical symbol order
/// (`C < N < P < V < W < c < n < p < v`), so the derived `Ord` is that order
/// and `Vec<Instruction>` compares lexicographically under it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Instruction {
    /// Edge from the primary node to the secondary node.
    EdgePrimary,
    /// Primary pointer forward.
    NextPrimary,
    /// Primary pointer backward.
    PrevPrimary,
    /// New node linked from the primary node.
    NodePrimary,
    /// No-op.
    Wait,
    /// Edge from the secondary node to the primary node.
    EdgeSecondary,
    /// Secondary pointer forward.
    NextSecondary,
    /// Secondary pointer backward.
    PrevSecondary,
    /// New node linked from the secondary node.
    NodeSecondary,
}

use Instruction::*;

impl Instruction {
    /// All symbols in canonical order.
    pub const ALL: [Instruction; 9] = [
        EdgePrimary,
        NextPrimary,
        PrevPrimary,
        NodePrimary,
        Wait,
        EdgeSecondary,
        NextSecondary,
        PrevSecondary,
        NodeSecondary,
    ];

    pub fn from_char(c: char) -> Option<Self> {
        Some(match c {
            'C' => EdgePrimary,
            'N' => NextPrimary,
            'P' => PrevPrimary,
            'V' => NodePrimary,
            'W' => Wait,
            'c' => EdgeSecondary,
            'n' => NextSecondary,
            'p' => PrevSecondary,
            'v' => NodeSecondary,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            EdgePrimary => 'C',
            NextPrimary => 'N',
            PrevPrimary => 'P',
            NodePrimary => 'V',
            Wait => 'W',
            EdgeSecondary => 'c',
            NextSecondary => 'n',
            PrevSecondary => 'p',
            NodeSecondary => 'v',
        }
    }

    /// Position in the canonical symbol order, 0..9.
    pub fn rank(self) -> u8 {
        self as u8
    }

    pub fn is_move(self) -> bool {
        matches!(
            self,
            NextPrimary | PrevPrimary | NextSecondary | PrevSecondary
        )
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Parses a string over the alphabet, rejecting the first foreign character.
pub fn parse(w: &str) -> Result<Vec<Instruction>> {
    w.chars()
        .enumerate()
        .map(|(index, c)| {
            Instruction::from_char(c).ok_or(Error::InvalidInstruction { index, found: c })
        })
        .collect()
}

pub fn render(program: &[Instruction]) -> String {
    program.iter().map(|i| i.as_char()).collect()
}

/// Compares two instruction strings under the canonical symbol order.
/// Both strings must already be valid.
pub fn cmp_symbol_order(a: &str, b: &str) -> std::cmp::Ordering {
    let key = |s: &str| -> Vec<u8> {
        s.chars()
            .map(|c| Instruction::from_char(c).map_or(u8::MAX, Instruction::rank))
            .collect()
    };
    key(a).cmp(&key(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_parse_each_symbol() {
        for i in Instruction::ALL {
            assert_eq!(Instruction::from_char(i.as_char()), Some(i));
        }
        assert_eq!(render(&parse("NnPpVvCcW").unwrap()), "NnPpVvCcW");
    }

    #[test]
    fn symbol_order_is_canonical() {
        let order: String = Instruction::ALL.iter().map(|i| i.as_char()).collect();
        assert_eq!(order, "CNPVWcnpv");
        assert!(Instruction::ALL.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(cmp_symbol_order("V", "v"), std::cmp::Ordering::Less);
        assert_eq!(cmp_symbol_order("VNVNC", "VVPnC"), std::cmp::Ordering::Less);
        assert_eq!(cmp_symbol_order("c", "W"), std::cmp::Ordering::Greater);
    }

    #[test]
    fn parse_reports_offending_index() {
        assert_eq!(
            parse("VNx"),
            Err(Error::InvalidInstruction {
                index: 2,
                found: 'x'
            })
        );
        assert!(parse("V V").is_err());
        assert!(parse("").unwrap().is_empty());
    }
}

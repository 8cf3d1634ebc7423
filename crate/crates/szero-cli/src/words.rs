//! Parser for the word grammar used by `eval-word`:
//!
//! ```text
//! word   := token* '@' weight shift?
//! token  := 'F' '[' int ',' int ']'
//!         | 'E' '[' int ',' int ']'
//!         | 'Psi' '[' ('+'|'-') ',' int ',' int ']'
//! weight := '(' int (',' int)* ')'
//! shift  := '[' int ']'
//! ```
//!
//! The optional trailing shift makes the expressions printed inside
//! certificates round-trip through this grammar.

use szero_core::algebra::{GenToken, WeightVector, Word};

#[derive(Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            position: self.pos,
            message,
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().map_err(|_| ParseError {
            position: start,
            message: "expected an integer".into(),
        })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string()
    }
}

pub fn parse_word(input: &str) -> Result<Word, ParseError> {
    let mut c = Cursor {
        src: input.as_bytes(),
        pos: 0,
    };
    let mut tokens = Vec::new();
    loop {
        c.skip_ws();
        match c.peek() {
            Some(b'@') => {
                c.pos += 1;
                break;
            }
            Some(ch) if ch.is_ascii_alphabetic() => {
                let name_pos = c.pos;
                let name = c.ident();
                c.expect(b'[')?;
                let token = match name.as_str() {
                    "F" | "E" => {
                        let color = c.int()?;
                        c.expect(b',')?;
                        let index = c.int()?;
                        if color < 1 {
                            return Err(ParseError {
                                position: name_pos,
                                message: "color must be at least 1".into(),
                            });
                        }
                        if name == "F" {
                            GenToken::f(color as usize, index)
                        } else {
                            GenToken::e(color as usize, index)
                        }
                    }
                    "Psi" => {
                        let sign = match c.peek() {
                            Some(b'+') => true,
                            Some(b'-') => false,
                            _ => return Err(c.error("expected '+' or '-'".into())),
                        };
                        c.pos += 1;
                        c.expect(b',')?;
                        let color = c.int()?;
                        c.expect(b',')?;
                        let exp = c.int()?;
                        if color < 1 {
                            return Err(ParseError {
                                position: name_pos,
                                message: "color must be at least 1".into(),
                            });
                        }
                        if sign {
                            GenToken::psi_plus(color as usize, exp)
                        } else {
                            GenToken::psi_minus(color as usize, exp)
                        }
                    }
                    other => {
                        return Err(ParseError {
                            position: name_pos,
                            message: format!("unknown generator '{other}'"),
                        })
                    }
                };
                c.expect(b']')?;
                tokens.push(token);
            }
            Some(_) => return Err(c.error("expected a generator or '@'".into())),
            None => return Err(c.error("expected '@ (weight)'".into())),
        }
    }
    c.skip_ws();
    c.expect(b'(')?;
    let mut entries = vec![c.int()?];
    loop {
        c.skip_ws();
        match c.peek() {
            Some(b',') => {
                c.pos += 1;
                c.skip_ws();
                entries.push(c.int()?);
            }
            Some(b')') => {
                c.pos += 1;
                break;
            }
            _ => return Err(c.error("expected ',' or ')'".into())),
        }
    }
    c.skip_ws();
    let mut shift = 0i64;
    if c.peek() == Some(b'[') {
        c.pos += 1;
        shift = c.int()?;
        c.expect(b']')?;
        c.skip_ws();
    }
    if c.pos != c.src.len() {
        return Err(c.error("trailing input".into()));
    }
    if entries.len() < 2 {
        return Err(ParseError {
            position: 0,
            message: "weight needs at least two entries".into(),
        });
    }
    let n = entries.len();
    for t in &tokens {
        if t.color >= n {
            return Err(ParseError {
                position: 0,
                message: format!("color {} out of range for n = {n}", t.color),
            });
        }
    }
    Ok(Word::new(tokens, WeightVector::new(entries), shift))
}

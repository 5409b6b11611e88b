//! DOT output checks: every emitted graph parses under an independent
//! checker for the DOT grammar fragment in use, node/edge counts line up
//! with the quiver, and the bytes are deterministic.

use affine_quiver::{affine_quiver, FiniteRing, Quiver};

/// Minimal DOT parser covering `digraph ID { stmts }` with quoted node ids,
/// bracketed attribute lists and `->` edges. Returns (nodes, edges) counted
/// as statements.
fn parse_dot(text: &str) -> Result<(usize, usize), String> {
    let mut tokens = tokenize(text)?;
    tokens.reverse();
    let mut pop = move || tokens.pop().ok_or_else(|| "unexpected end".to_string());

    match pop()? {
        Token::Ident(k) if k == "digraph" => {}
        t => return Err(format!("expected `digraph`, got {t:?}")),
    }
    match pop()? {
        Token::Ident(_) => {}
        t => return Err(format!("expected a graph name, got {t:?}")),
    }
    expect(pop()?, &Token::OpenBrace)?;

    let mut nodes = 0usize;
    let mut edges = 0usize;
    loop {
        match pop()? {
            Token::CloseBrace => break,
            Token::Quoted(_) => {
                // Either a node statement (optional attributes) or an edge.
                match pop()? {
                    Token::Semicolon => nodes += 1,
                    Token::OpenBracket => {
                        loop {
                            match pop()? {
                                Token::CloseBracket => break,
                                Token::Ident(_) => {
                                    expect(pop()?, &Token::Equals)?;
                                    match pop()? {
                                        Token::Ident(_) | Token::Quoted(_) => {}
                                        t => return Err(format!("bad attribute value {t:?}")),
                                    }
                                }
                                t => return Err(format!("bad attribute {t:?}")),
                            }
                        }
                        expect(pop()?, &Token::Semicolon)?;
                        nodes += 1;
                    }
                    Token::Arrow => {
                        match pop()? {
                            Token::Quoted(_) => {}
                            t => return Err(format!("bad edge target {t:?}")),
                        }
                        expect(pop()?, &Token::Semicolon)?;
                        edges += 1;
                    }
                    t => return Err(format!("unexpected token {t:?}")),
                }
            }
            t => return Err(format!("unexpected statement start {t:?}")),
        }
    }
    Ok((nodes, edges))
}

#[derive(Debug, PartialEq)]
enum Token {
    Ident(String),
    Quoted(String),
    OpenBrace,
    CloseBrace,
    OpenBracket,
    CloseBracket,
    Equals,
    Semicolon,
    Arrow,
}

fn expect(got: Token, want: &Token) -> Result<(), String> {
    if &got == want {
        Ok(())
    } else {
        Err(format!("expected {want:?}, got {got:?}"))
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '{' => {
                chars.next();
                out.push(Token::OpenBrace);
            }
            '}' => {
                chars.next();
                out.push(Token::CloseBrace);
            }
            '[' => {
                chars.next();
                out.push(Token::OpenBracket);
            }
            ']' => {
                chars.next();
                out.push(Token::CloseBracket);
            }
            '=' => {
                chars.next();
                out.push(Token::Equals);
            }
            ';' => {
                chars.next();
                out.push(Token::Semicolon);
            }
            '-' => {
                chars.next();
                if chars.next() != Some('>') {
                    return Err("stray `-`".into());
                }
                out.push(Token::Arrow);
            }
            '"' => {
                chars.next();
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some(c) => s.push(c),
                        None => return Err("unterminated string".into()),
                    }
                }
                out.push(Token::Quoted(s));
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(s));
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

fn quiver(spec: &str) -> Quiver {
    affine_quiver(&FiniteRing::parse(spec).unwrap()).unwrap()
}

#[test]
fn dot_parses_and_counts_match() {
    for spec in ["Z/4", "Z/6", "Z/8", "Z/9", "GF(8)", "Z/12"] {
        let q = quiver(spec);
        let dot = q.to_dot();
        let (nodes, edges) = parse_dot(&dot).unwrap_or_else(|e| panic!("{spec}: {e}\n{dot}"));
        assert_eq!(nodes, q.vertex_count(), "{spec}");
        assert_eq!(edges as u64, q.arrow_count(), "{spec}");
    }
}

#[test]
fn z4_dot_line_counts() {
    let dot = quiver("Z/4").to_dot();
    let node_lines = dot
        .lines()
        .filter(|l| l.contains("[dim=") && !l.contains("->"))
        .count();
    let edge_lines = dot.lines().filter(|l| l.contains("->")).count();
    assert_eq!(node_lines, 6);
    assert_eq!(edge_lines, 4);
    // One self-loop.
    assert!(dot.contains("\"W(O0,r0)\" -> \"W(O0,r0)\";"));
}

#[test]
fn dot_bytes_are_deterministic() {
    for spec in ["Z/6", "Z/9"] {
        assert_eq!(quiver(spec).to_dot(), quiver(spec).to_dot());
        assert_eq!(quiver(spec).to_json(), quiver(spec).to_json());
    }
}

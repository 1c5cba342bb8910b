//! Helpers shared by the integration test targets.

#![allow(dead_code)]

/// Validate a DOT digraph document against the grammar the graph emitter
/// promises: a `digraph <name> {` header, bare `key=value;` attribute
/// statements, quoted node statements `"id" [attrs];`, quoted edge
/// statements `"id" -> "id" [attrs];`, and a single closing brace.  Panics
/// at the first offending line.
pub fn assert_valid_dot(src: &str) {
    let mut lines = src.lines();
    let header = lines.next().expect("nonempty document");
    assert!(
        header.starts_with("digraph ") && header.trim_end().ends_with('{'),
        "bad DOT header: {header:?}"
    );
    let name = header["digraph ".len()..header.len() - 1].trim();
    assert!(
        !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'),
        "bad graph name in header: {header:?}"
    );
    let mut closed = false;
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        assert!(!closed, "content after the closing brace: {line:?}");
        if line == "}" {
            closed = true;
            continue;
        }
        assert!(line.ends_with(';'), "unterminated statement: {line:?}");
        let stmt = line[..line.len() - 1].trim();
        if !stmt.contains('"') {
            // A bare graph attribute such as `rankdir=LR`.
            let (key, value) = stmt.split_once('=').expect("key=value statement");
            assert!(
                is_bare_id(key.trim()) && is_bare_id(value.trim()),
                "bad attribute: {stmt:?}"
            );
            continue;
        }
        let (ids, attrs) = match stmt.find('[') {
            Some(pos) => {
                assert!(stmt.ends_with(']'), "unclosed attribute list: {stmt:?}");
                (stmt[..pos].trim(), Some(&stmt[pos + 1..stmt.len() - 1]))
            }
            None => (stmt, None),
        };
        let endpoints: Vec<&str> = ids.split("->").map(str::trim).collect();
        assert!(
            endpoints.len() <= 2,
            "chained edge statements are not part of the emitted grammar: {stmt:?}"
        );
        for id in &endpoints {
            assert!(is_quoted_id(id), "malformed quoted id {id:?} in {stmt:?}");
        }
        if let Some(attrs) = attrs {
            for attr in split_outside_quotes(attrs, ',') {
                let attr = attr.trim();
                let (key, value) = attr
                    .split_once('=')
                    .unwrap_or_else(|| panic!("attribute without value: {attr:?}"));
                assert!(is_bare_id(key.trim()), "bad attribute key in {attr:?}");
                let value = value.trim();
                assert!(
                    is_quoted_id(value) || is_bare_id(value),
                    "bad attribute value in {attr:?}"
                );
            }
        }
    }
    assert!(closed, "missing closing brace");
}

fn is_bare_id(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_quoted_id(s: &str) -> bool {
    s.len() >= 2 && s.starts_with('"') && s.ends_with('"') && !s[1..s.len() - 1].contains('"')
}

/// Split on a separator, ignoring separators inside double quotes.
fn split_outside_quotes(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut start = 0;
    let mut in_quotes = false;
    for (idx, c) in s.char_indices() {
        match c {
            '"' => in_quotes = !in_quotes,
            c if c == sep && !in_quotes => {
                parts.push(&s[start..idx]);
                start = idx + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

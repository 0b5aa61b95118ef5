//! Makes implicit multiplication explicit so that hand-written equations
//! such as `2xy(x-z)` are accepted by the strict polynomial parser.

/// Inserts `*` between adjacent factors: digit or `)` followed by a letter,
/// digit or `(`; a letter followed by a letter, digit or `(`.
///
/// `x2` therefore reads as `x*2`; exponents must be written with `^`.
pub fn normalize(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 8);
    let mut prev: Option<char> = None;
    for c in text.chars() {
        if c.is_whitespace() {
            out.push(c);
            continue;
        }
        if let Some(p) = prev {
            let ends_factor = p.is_ascii_alphanumeric() || p == ')';
            let starts_factor = c.is_ascii_alphabetic() || c == '(' || (c.is_ascii_digit() && !p.is_ascii_digit());
            if ends_factor && starts_factor {
                out.push('*');
            }
        }
        out.push(c);
        prev = Some(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inserts_products() {
        assert_eq!(normalize("24x^2"), "24*x^2");
        assert_eq!(normalize("xy(x-z)"), "x*y*(x-z)");
        assert_eq!(normalize("(x+y)(x-y)"), "(x+y)*(x-y)");
        assert_eq!(normalize("3(y+z)"), "3*(y+z)");
    }

    #[test]
    fn leaves_explicit_input_alone() {
        assert_eq!(normalize("x^2 + 10*y*z - 3/4*z^2"), "x^2 + 10*y*z - 3/4*z^2");
        assert_eq!(normalize("x^12"), "x^12");
    }

    #[test]
    fn spaces_separate_but_still_multiply() {
        assert_eq!(normalize("2 x"), "2 *x");
    }
}

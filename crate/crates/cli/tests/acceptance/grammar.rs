//! Curve-expression corpus. Valid entries carry an equivalent expression
//! that must parse to the same polynomial; invalid entries carry the
//! 0-based character position of the error.

#[derive(Debug, Clone, Copy)]
pub enum Over {
    F3,
    F5,
    F7,
    F9,
}

#[derive(Debug, Clone, Copy)]
pub enum Expect {
    Same(&'static str),
    ErrorAt(usize),
}

pub const CASES: &[(Over, &str, Expect)] = {
    use Expect::{ErrorAt, Same};
    use Over::{F3, F5, F7, F9};
    &[
        // valid
        (F5, "x", Same("1*x")),
        (F5, "y", Same("y^1")),
        (F5, "0", Same("5")),
        (F5, "7", Same("2")),
        (F5, "x+y", Same("y + x")),
        (F5, "x - y", Same("x + 4*y")),
        (F5, "x*y - 1", Same("x*y + 4")),
        (F5, "y^2 - x^3 - 3*x - 1", Same("y^2 + 4*x^3 + 2*x + 4")),
        (F5, "(x+y)^2", Same("x^2 + 2*x*y + y^2")),
        (F5, "((x))", Same("x")),
        (F5, "-x", Same("4*x")),
        (F5, "-(x+y)^3", Same("4*x^3 + 2*x^2*y + 2*x*y^2 + 4*y^3")),
        (F5, "x^0", Same("1")),
        (F5, "2*3*x", Same("x")),
        (F5, "x ^ 2", Same("x*x")),
        (F5, "  x  ", Same("x")),
        (F5, "x^10", Same("x^5*x^5")),
        (F5, "12345678901234567890*x", Same("0")),
        (F5, "12345678901234567891*x", Same("x")),
        (F5, "(x-y)*(x+y)", Same("x^2 - y^2")),
        (F5, "x*y*x*y", Same("x^2*y^2")),
        (F5, "0*x + y", Same("y")),
        (F5, "x^2-x^2", Same("0")),
        (F5, "1-1", Same("0")),
        (F5, "(((1)))", Same("1")),
        (F5, "-0", Same("0")),
        (F5, "x^2+2*x*y+y^2", Same("(x+y)^2")),
        (F5, "(x+1)^5", Same("x^5 + 1")),
        (F5, "3*x^2*y + 4", Same("4 - 2*x^2*y")),
        (F5, "y - (x - 1)", Same("y - x + 1")),
        (F5, "x-(y-(x-(y)))", Same("2*x - 2*y")),
        (F5, "\tx\n+ y", Same("x+y")),
        (F5, "(2)", Same("2")),
        (F5, "x^1*y^1", Same("x*y")),
        (F5, "x^007", Same("x^7")),
        (
            F5,
            "1 + x + x^2 + x^3 + x^4",
            Same("x^4 + x^3 + x^2 + x + 1"),
        ),
        (F5, "(-x)", Same("4*x")),
        (F5, "(-x)^2", Same("x^2")),
        (F5, "x*(-y)", Same("4*x*y")),
        (F3, "y^2 + 2*x*y + 2*y + x", Same("y^2 - x*y - y + x")),
        (F3, "(x+y)^3", Same("x^3 + y^3")),
        (F3, "x^ 2", Same("x^2")),
        (F7, "x^7 - x", Same("x^7 + 6*x")),
        (F7, "-1", Same("6")),
        (F9, "g", Same("g^1")),
        (F9, "g^2", Same("2")),
        (F9, "g*x + g^2*y", Same("g*x - y")),
        (F9, "(1+g)^2", Same("2*g")),
        (F9, "(1+g)^8", Same("1")),
        (F9, "x*y - 1", Same("x*y + 2")),
        // invalid
        (F5, "", ErrorAt(0)),
        (F5, "   ", ErrorAt(3)),
        (F5, "x +", ErrorAt(3)),
        (F5, "x + ", ErrorAt(4)),
        (F5, "(x", ErrorAt(2)),
        (F5, "(x+y", ErrorAt(4)),
        (F5, "x)", ErrorAt(1)),
        (F5, "x y", ErrorAt(2)),
        (F5, "x^^2", ErrorAt(2)),
        (F5, "x^", ErrorAt(2)),
        (F5, "x^-1", ErrorAt(2)),
        (F5, "x^y", ErrorAt(2)),
        (F5, "x^(2)", ErrorAt(2)),
        (F5, "*x", ErrorAt(0)),
        (F5, "x**y", ErrorAt(2)),
        (F5, "x+*y", ErrorAt(2)),
        (F5, "x*-y", ErrorAt(2)),
        (F5, "x+-y", ErrorAt(2)),
        (F5, "--x", ErrorAt(1)),
        (F5, "z", ErrorAt(0)),
        (F5, "x + z", ErrorAt(4)),
        (F5, "()", ErrorAt(1)),
        (F5, "x(y)", ErrorAt(1)),
        (F5, "2x", ErrorAt(1)),
        (F5, "x^2^3", ErrorAt(3)),
        (F5, "x^99999999999", ErrorAt(2)),
        (F5, "x^ 99999999999", ErrorAt(3)),
        (F5, "a", ErrorAt(0)),
        (F5, "x + 1.5", ErrorAt(5)),
        (F5, "x = 0", ErrorAt(2)),
        (F5, "y^2 - ", ErrorAt(6)),
        (F5, "(x+y))", ErrorAt(5)),
        (F5, "((x+y)", ErrorAt(6)),
        (F5, "x + (y * )", ErrorAt(9)),
        (F5, "x,y", ErrorAt(1)),
        (F5, "X", ErrorAt(0)),
        (F5, "x + Y", ErrorAt(4)),
        (F5, "g", ErrorAt(0)),
        (F5, "2*g", ErrorAt(2)),
        (F7, "x^2 + g*y", ErrorAt(6)),
        (F5, "-", ErrorAt(1)),
        (F5, "- ", ErrorAt(2)),
        (F5, "+x", ErrorAt(0)),
        (F5, "x - -1", ErrorAt(4)),
        (F5, "x^2.0", ErrorAt(3)),
        (F5, "1 2", ErrorAt(2)),
        (F5, "x ^", ErrorAt(3)),
        (F5, "x²", ErrorAt(1)),
        (F5, "é + x", ErrorAt(0)),
        (F9, "x + gé", ErrorAt(5)),
    ]
};

//! Fixed inputs shared by the benchmarks.

use realpv::{parse_constant, parse_equation, LinearOde, RealAlgebraic};

/// Homogeneous equations of increasing size, all of Kummer type.
pub fn kummer_equations() -> Vec<(&'static str, LinearOde)> {
    [
        ("n2_one_pole", "x' = x/(2*t)"),
        ("n6_two_poles", "x' = x/(2*t) + x/(3*(t - 1))"),
        (
            "n12_quadratic_poles",
            "x' = (2*t + 1)/(4*(t^2 + t + 1))*x - x/(3*(t + 2)) + 2*t/(6*(t^2 + 3))*x",
        ),
    ]
    .into_iter()
    .map(|(name, text)| {
        (
            name,
            parse_equation(text, None).expect("benchmark input parses"),
        )
    })
    .collect()
}

pub fn constants() -> Vec<(&'static str, RealAlgebraic)> {
    [
        ("rational", "7/3"),
        ("sqrt2", "root(t^2 - 2, [1, 2])"),
        ("cbrt5", "root(t^3 - 5, [1, 2])"),
        ("golden", "root(t^2 - t - 1, [1, 2])"),
    ]
    .into_iter()
    .map(|(name, text)| {
        (
            name,
            parse_constant(text).expect("benchmark constant parses"),
        )
    })
    .collect()
}

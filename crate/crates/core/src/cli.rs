//! Command-line entry point (placeholder while lower modules build out).
pub fn run() -> i32 {
    0
}

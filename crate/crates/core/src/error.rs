use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate interval [{lo}, {hi}] (doubled units): positive length required")]
    DegenerateInterval { lo: i32, hi: i32 },
    #[error("level parameter s={s} outside supported range {min}..={max}")]
    LevelOutOfRange { s: u32, min: u32, max: u32 },
    #[error("profile parameters (s={s}, v={v}) outside supported range")]
    ProfileOutOfRange { s: u32, v: u32 },
    #[error("support is not contained in the level-{s} interval family")]
    SupportOutsideLevel { s: u32 },
    #[error("empty family")]
    EmptyFamily,
    #[error("expected a clique of {expected} boxes, got {got}")]
    NotAClique { expected: usize, got: usize },
    #[error("fixture `{name}`: {msg}")]
    Fixture { name: String, msg: String },
    #[error("artifact `{0}` is missing; run the producing stage first")]
    MissingArtifact(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use coideal_core::rootsys::RootSystem;
use coideal_core::uqplus::NfContext;
use coideal_core::weyl::{all_elements, ReducedWord, WeylElt};
use coideal_core::Error;

/// Usage problems exit with 2, everything else with 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidCartan(_)
            | Error::UnknownType(_)
            | Error::NotReduced
            | Error::BadLetter(_)
            | Error::BadIndex { .. } => CliError::Usage(e.to_string()),
            e => CliError::Failure(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

/// Which Weyl group elements a command looks at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    W0,
    Word(ReducedWord),
    All,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub rs: RootSystem,
    pub selector: Selector,
    pub height: Option<u32>,
    pub format: Format,
    pub suite: String,
}

/// Integer rows separated by newlines or `;`, entries by spaces or commas;
/// a JSON array of arrays also works.
pub fn parse_cartan(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let text = text.trim();
    if text.starts_with('[') {
        return serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad Cartan matrix: {e}")));
    }
    text.split(['\n', ';'])
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split([' ', ',', '\t'])
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<i64>().map_err(|_| CliError::Usage(format!("bad Cartan entry {x:?}"))))
                .collect()
        })
        .collect()
}

impl RunConfig {
    /// Validates everything before any computation.
    pub fn new(
        type_name: Option<&str>,
        cartan: Option<&str>,
        word: &str,
        height: Option<u32>,
        format: Format,
        suite: &str,
    ) -> Result<Self, CliError> {
        let rs = match (type_name, cartan) {
            (Some(t), None) => RootSystem::from_type(t)?,
            (None, Some(text)) => RootSystem::from_cartan(parse_cartan(text)?)?,
            _ => return Err(CliError::Usage("give exactly one of --type and --cartan-file".into())),
        };
        let selector = match word.trim() {
            "w0" => Selector::W0,
            "all" => Selector::All,
            s => Selector::Word(ReducedWord::parse(&rs, s)?),
        };
        if !crate::suites::SUITES.contains(&suite) && suite != "all" {
            return Err(CliError::Usage(format!(
                "unknown suite {suite:?}; expected one of {} or all",
                crate::suites::SUITES.join(", ")
            )));
        }
        Ok(RunConfig { rs, selector, height, format, suite: suite.to_string() })
    }

    /// The selected elements with one reduced word each.
    pub fn elements(&self) -> Vec<(WeylElt, ReducedWord)> {
        let rs = &self.rs;
        match &self.selector {
            Selector::W0 => {
                let w = WeylElt::longest(rs);
                let word = w.reduced_word(rs);
                vec![(w, word)]
            }
            Selector::Word(word) => vec![(word.element(rs), word.clone())],
            Selector::All => all_elements(rs)
                .into_iter()
                .map(|w| {
                    let word = w.reduced_word(rs);
                    (w, word)
                })
                .collect(),
        }
    }

    pub fn context(&self) -> NfContext {
        match self.height {
            Some(h) => NfContext::with_bound(&self.rs, h),
            None => NfContext::new(&self.rs),
        }
    }
}

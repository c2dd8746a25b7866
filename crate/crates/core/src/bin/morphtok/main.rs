use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use morphtok::metrics::fmt_pct;
use morphtok::tokenizer::{corpus_report, encode_all, train_vocab};
use morphtok::{
    clean_corpus, compare, decode, display_compat, read_tokenized, sentence_wsr, write_tokenized,
    ClassTable, CleanConfig, CompareRow, Corpus, InputFormat, PipelineMode, TokenSequence,
    TrainConfig, Vocabulary,
};

#[derive(Parser, Debug)]
#[command(name = "morphtok", version, about = "Korean subword tokenization toolkit")]
struct Cli {
    /// Worker threads (0 uses every core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Drop short sentences and characters outside ASCII and Hangul.
    Clean {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 3)]
        min_eojeols: usize,
    },
    /// Print the pre-tokens of each sentence.
    Pretokenize {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        mode: PipelineMode,
        /// Render jamo as compatibility jamo.
        #[arg(long)]
        display: bool,
    },
    /// Train a WordPiece vocabulary.
    TrainVocab {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        mode: PipelineMode,
        #[arg(long)]
        vocab_size: usize,
        /// Write the training report (TSV) here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Encode sentences with a trained vocabulary.
    Tokenize {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        mode: PipelineMode,
        #[arg(long)]
        vocab: PathBuf,
        #[arg(long)]
        display: bool,
    },
    /// Rebuild text from tokenized lines.
    Detokenize {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        mode: PipelineMode,
    },
    /// OOV rate, WSR and WSER of tokenized lines.
    Metrics {
        #[command(flatten)]
        io: IoArgs,
        /// Adds WSER to the report.
        #[arg(long)]
        vocab: Option<PathBuf>,
        /// Print one WSR per sentence instead of the report.
        #[arg(long)]
        per_sentence: bool,
    },
    /// Train and evaluate every (mode, vocab size) pair on one corpus.
    Compare {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        modes: Vec<PipelineMode>,
        #[arg(long, value_delimiter = ',', required = true)]
        vocab_sizes: Vec<usize>,
    },
}

#[derive(Args, Debug)]
struct IoArgs {
    /// Input file (default: stdin).
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input is analyzer output. Implied by morpheme modes.
    #[arg(long, conflicts_with = "demo_analyzer")]
    tagged: bool,
    /// Analyze raw lines with the built-in demo dictionary.
    #[arg(long)]
    demo_analyzer: bool,
    /// POS class overrides, one `TAG=lexical|grammatical` per line.
    #[arg(long)]
    class_table: Option<PathBuf>,
}

struct Failure {
    class: &'static str,
    source: Option<String>,
    message: String,
}

impl From<morphtok::Error> for Failure {
    fn from(e: morphtok::Error) -> Self {
        Failure {
            class: e.class(),
            source: None,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        morphtok::Error::from(e).into()
    }
}

trait Located<T> {
    fn at(self, source: &str) -> Result<T, Failure>;
}

impl<T, E: Into<Failure>> Located<T> for Result<T, E> {
    fn at(self, source: &str) -> Result<T, Failure> {
        self.map_err(|e| {
            let mut f = e.into();
            f.source.get_or_insert_with(|| source.to_owned());
            f
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("morphtok: warning: {e}");
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match f.source {
                Some(src) => eprintln!("morphtok: error[{}]: {}: {}", f.class, src, f.message),
                None => eprintln!("morphtok: error[{}]: {}", f.class, f.message),
            }
            // bad flag values are usage errors, everything else comes from the data
            ExitCode::from(if f.class == "InvalidConfig" { 1 } else { 2 })
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Clean { io, min_eojeols } => {
            let cfg = CleanConfig::with_min_eojeols(min_eojeols)?;
            let src = io.source_name();
            let mut out = io.writer()?;
            let mut lines = clean_corpus(io.reader()?, cfg);
            for line in lines.by_ref() {
                writeln!(out, "{}", line.at(&src)?)?;
            }
            out.flush()?;
            let s = lines.stats();
            eprintln!(
                "read {} lines, kept {}, dropped {} short, skipped {} with invalid UTF-8",
                s.lines_read, s.kept, s.dropped_short, s.invalid_encoding
            );
        }
        Command::Pretokenize {
            io,
            input,
            mode,
            display,
        } => {
            let corpus = input.load(&io, &[mode])?;
            let mut out = io.writer()?;
            for sentence in corpus.pretokenize(mode).at(&io.source_name())? {
                let line: Vec<&str> = sentence.iter().map(|p| p.text.as_str()).collect();
                write_line(&mut out, &line.join(" "), display)?;
            }
            out.flush()?;
        }
        Command::TrainVocab {
            io,
            input,
            mode,
            vocab_size,
            report,
        } => {
            let cfg = TrainConfig::with_vocab_size(vocab_size);
            let corpus = input.load(&io, &[mode])?;
            let pretokens = corpus.pretokenize(mode).at(&io.source_name())?;
            let trained = train_vocab(&pretokens, &cfg).at(&io.source_name())?;
            let mut out = io.writer()?;
            trained.vocab.write_to(&mut out)?;
            if let Some(path) = report {
                let name = path.display().to_string();
                trained
                    .write_report(BufWriter::new(File::create(&path).at(&name)?))
                    .at(&name)?;
            }
        }
        Command::Tokenize {
            io,
            input,
            mode,
            vocab,
            display,
        } => {
            let vocab = load_vocab(&vocab)?;
            let corpus = input.load(&io, &[mode])?;
            let pretokens = corpus.pretokenize(mode).at(&io.source_name())?;
            let encoded = encode_all(&pretokens, &vocab);
            let mut out = io.writer()?;
            if display {
                for seq in &encoded {
                    write_line(&mut out, &seq.to_string(), true)?;
                }
                out.flush()?;
            } else {
                write_tokenized(&encoded, out)?;
            }
        }
        Command::Detokenize { io, mode } => {
            let src = io.source_name();
            let mut out = io.writer()?;
            for seq in read_tokenized(io.reader()?) {
                let seq = seq.at(&src)?;
                writeln!(out, "{}", decode(&seq.tokens, mode).at(&src)?)?;
            }
            out.flush()?;
        }
        Command::Metrics {
            io,
            vocab,
            per_sentence,
        } => {
            let vocab = vocab.as_deref().map(load_vocab).transpose()?;
            let src = io.source_name();
            let seqs: Vec<TokenSequence> = read_tokenized(io.reader()?)
                .collect::<morphtok::Result<_>>()
                .at(&src)?;
            let report = corpus_report(&seqs, vocab.as_ref()).at(&src)?;
            let mut out = io.writer()?;
            if per_sentence {
                for seq in &seqs {
                    match sentence_wsr(&seq.tokens) {
                        Some(w) => writeln!(out, "{}", fmt_pct(w))?,
                        None => writeln!(out, "NA")?,
                    }
                }
            } else {
                report.write_tsv(&mut out)?;
            }
            out.flush()?;
            eprintln!("{}", report.summary());
        }
        Command::Compare {
            io,
            input,
            modes,
            vocab_sizes,
        } => {
            let corpus = input.load(&io, &modes)?;
            let rows = compare(&corpus, &modes, &vocab_sizes, &TrainConfig::default())
                .at(&io.source_name())?;
            let mut out = io.writer()?;
            writeln!(out, "{}", CompareRow::TSV_HEADER)?;
            for row in &rows {
                writeln!(out, "{}", row.tsv_row())?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

fn write_line(out: &mut impl Write, line: &str, display: bool) -> io::Result<()> {
    if display {
        writeln!(out, "{}", display_compat(line))
    } else {
        writeln!(out, "{line}")
    }
}

fn load_vocab(path: &Path) -> Result<Vocabulary, Failure> {
    Vocabulary::load(path).at(&path.display().to_string())
}

impl IoArgs {
    fn source_name(&self) -> String {
        self.input
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_else(|| "<stdin>".into())
    }

    fn reader(&self) -> Result<Box<dyn BufRead>, Failure> {
        Ok(match &self.input {
            Some(path) => Box::new(BufReader::new(File::open(path).at(&self.source_name())?)),
            None => Box::new(BufReader::new(io::stdin())),
        })
    }

    fn writer(&self) -> Result<Box<dyn Write>, Failure> {
        Ok(match &self.output {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).at(&path.display().to_string())?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

impl InputArgs {
    fn format(&self, modes: &[PipelineMode]) -> InputFormat {
        if self.demo_analyzer {
            InputFormat::Demo
        } else if self.tagged || modes.iter().any(|m| m.is_morphemic()) {
            InputFormat::Tagged
        } else {
            InputFormat::Raw
        }
    }

    fn class_table(&self) -> Result<ClassTable, Failure> {
        match &self.class_table {
            Some(path) => {
                let name = path.display().to_string();
                let text = fs::read_to_string(path).at(&name)?;
                ClassTable::with_overrides(&text).at(&name)
            }
            None => Ok(ClassTable::default()),
        }
    }

    fn load(&self, io: &IoArgs, modes: &[PipelineMode]) -> Result<Corpus, Failure> {
        let table = self.class_table()?;
        Corpus::load(io.reader()?, self.format(modes), &table).at(&io.source_name())
    }
}

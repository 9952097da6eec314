use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qeta::fshuffle::{antipode_f, deconcat, sharp, sharp_explicit, FreeWordElement, SharpParams};
use qeta::json::{document_to_json, parse_element, Document, Element};
use qeta::nsym::{coproduct_eta_star, coproduct_h, h_product, pairing};
use qeta::oracle::expand as oracle_expand;
use qeta::products::{enumerate_stufufufflers, eta_product_v1, eta_product_v2, eta_product_v3};
use qeta::qsym::{antipode, antipode_eta_s, antipode_eta_s2, antipode_eta_s_at, coproduct, product};
use qeta::scalar::parse_rational;
use qeta::verify::{run_suites, Suite};
use qeta::{Basis, BigRational, Composition, Error, LinComb, QSymElement, Scalar, TensorElement};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ARITHMETIC: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qeta",
    version,
    about = "Exact computations with the enriched q-monomial basis of QSym"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Specialize q to this rational number in the output.
    #[arg(long, global = true, value_name = "RATIONAL", allow_hyphen_values = true)]
    q: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an element in its algebra's working basis (M, H or words).
    Expand {
        element: String,
        /// Dump the polynomial in this many variables instead.
        #[arg(long)]
        nvars: Option<usize>,
        /// Degree bound for the polynomial dump (defaults to --nvars).
        #[arg(long)]
        maxdeg: Option<usize>,
    },
    /// Re-express an element in another basis of the same algebra.
    Convert {
        element: String,
        #[arg(long)]
        to: String,
    },
    /// Multiply two elements.
    Product {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t = ProductMethod::Basis)]
        method: ProductMethod,
    },
    Coproduct {
        element: String,
    },
    Antipode {
        /// Element (for --method m).
        element: Option<String>,
        /// Composition (for --method s, s2, f).
        #[arg(long)]
        comp: Option<String>,
        #[arg(long, value_enum, default_value_t = AntipodeMethod::M)]
        method: AntipodeMethod,
        #[arg(long, default_value = "q-1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "-q", allow_hyphen_values = true)]
        b: String,
    },
    /// Pair an NSym element with a QSym element.
    Pair {
        nsym: String,
        qsym: String,
    },
    /// List the stufufufflers of two compositions with their statistics.
    Stufufufflers {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// The product # on the free algebra.
    Sharp {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value = "q-1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "-q", allow_hyphen_values = true)]
        b: String,
        /// Use the stufufuffler formula instead of the recursion.
        #[arg(long)]
        explicit: bool,
    },
    /// Run the identity checks.
    Verify {
        #[arg(long, env = "QETA_MAXDEG", default_value_t = 6)]
        maxdeg: usize,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductMethod {
    /// Ordinary product in the algebra of the inputs.
    Basis,
    V1,
    V2,
    V3,
}

#[derive(Clone, Copy, ValueEnum)]
enum AntipodeMethod {
    M,
    S,
    S2,
    F,
}

enum Output {
    Doc(Document),
    Scalar(Scalar),
    Text {
        text: String,
        json: serde_json::Value,
    },
    Report {
        text: String,
        json: serde_json::Value,
        passed: bool,
    },
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

/// A composition, optionally written with a basis prefix such as `eta:1,2`.
fn parse_comp(s: &str) -> Result<Composition, Error> {
    let body = s.split_once(':').map_or(s, |(_, rest)| rest);
    body.parse()
}

fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    s.parse()
}

/// Bare compositions are read as `η` basis elements.
fn element_or_eta(s: &str) -> Result<Element, Error> {
    match s.parse::<Composition>() {
        Ok(a) => Ok(Element::QSym(QSymElement::basis_element(Basis::Eta, &a)?)),
        Err(_) => parse_element(s),
    }
}

fn word(s: &str) -> Result<FreeWordElement, Error> {
    Ok(FreeWordElement::word(&parse_comp(s)?))
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Expand { element, nvars, maxdeg } => {
            let e = parse_element(element)?;
            if let Some(n) = nvars {
                let Element::QSym(f) = &e else {
                    return Err(usage("polynomial dumps exist only for QSym elements"));
                };
                let d = maxdeg.unwrap_or(*n);
                let mut p = oracle_expand(f, *n, d)?;
                if let Some(q0) = q_value(cli)? {
                    let mut terms = LinComb::new();
                    for (m, c) in p.terms().iter() {
                        terms.add_term(m.clone(), Scalar::from_rational(&c.evaluate(&q0)?));
                    }
                    p = qeta::TruncatedPolynomial::new(*n, d, terms)?;
                }
                let lines: Vec<String> = p.to_string().lines().map(str::to_string).collect();
                return Ok(Output::Text {
                    text: p.to_string(),
                    json: json!(lines),
                });
            }
            Ok(Output::Doc(Document::Element(match e {
                Element::QSym(f) => Element::QSym(f.to_m()),
                Element::NSym(f) => Element::NSym(f.to_h()),
                other => other,
            })))
        }
        Command::Convert { element, to } => {
            let target = Basis::from_label(to)?;
            let e = parse_element(element)?;
            Ok(Output::Doc(Document::Element(match e {
                Element::QSym(f) => Element::QSym(f.convert(target)?),
                Element::NSym(f) => Element::NSym(f.convert(target)?),
                Element::Free(f) if target == Basis::Word => Element::Free(f),
                Element::Free(_) => return Err(usage("free-algebra elements have only the word basis")),
            })))
        }
        Command::Product { left, right, method } => {
            let rule = match method {
                ProductMethod::V1 => eta_product_v1,
                ProductMethod::V2 => eta_product_v2,
                ProductMethod::V3 => eta_product_v3,
                ProductMethod::Basis => {
                    let (l, r) = (element_or_eta(left)?, element_or_eta(right)?);
                    let out = match (l, r) {
                        (Element::QSym(f), Element::QSym(g)) => {
                            let p = product(&f, &g);
                            Element::QSym(if f.basis() == g.basis() {
                                p.convert(f.basis())?
                            } else {
                                p
                            })
                        }
                        (Element::NSym(f), Element::NSym(g)) => {
                            let p = h_product(&f, &g);
                            Element::NSym(if f.basis() == g.basis() {
                                p.convert(f.basis())?
                            } else {
                                p
                            })
                        }
                        (Element::Free(_), Element::Free(_)) => {
                            return Err(usage("use the sharp command to multiply words"))
                        }
                        _ => return Err(usage("the two factors belong to different algebras")),
                    };
                    return Ok(Output::Doc(Document::Element(out)));
                }
            };
            let e = rule(&parse_comp(left)?, &parse_comp(right)?);
            Ok(Output::Doc(Document::Element(Element::QSym(e))))
        }
        Command::Coproduct { element } => {
            let t = match parse_element(element)? {
                Element::QSym(f) => coproduct(&f),
                Element::NSym(f) if f.basis() == Basis::EtaStar => {
                    let mut terms = LinComb::new();
                    for (a, c) in f.terms().iter() {
                        terms.add_scaled(coproduct_eta_star(a).terms(), c);
                    }
                    TensorElement::new(Basis::EtaStar, Basis::EtaStar, terms)
                }
                Element::NSym(f) => coproduct_h(&f),
                Element::Free(f) => deconcat(&f),
            };
            Ok(Output::Doc(Document::Tensor(t)))
        }
        Command::Antipode {
            element,
            comp,
            method,
            a,
            b,
        } => {
            let need_comp = || -> Result<Composition, Error> {
                comp.as_deref()
                    .ok_or_else(|| usage("this method needs --comp"))
                    .and_then(parse_comp)
            };
            let out = match method {
                AntipodeMethod::M => {
                    let text = element
                        .as_deref()
                        .map(str::to_string)
                        .or_else(|| {
                            comp.as_ref()
                                .map(|c| format!("M:{}", c.split_once(':').map_or(c.as_str(), |x| x.1)))
                        })
                        .ok_or_else(|| usage("give an element or --comp"))?;
                    match parse_element(&text)? {
                        Element::QSym(f) => Element::QSym(antipode(&f)),
                        _ => return Err(usage("--method m applies to QSym elements")),
                    }
                }
                AntipodeMethod::S2 => Element::QSym(antipode_eta_s2(&need_comp()?)),
                AntipodeMethod::S => match q_value(cli)? {
                    // p = 1/q has to exist before anything is expanded
                    Some(q0) => Element::QSym(antipode_eta_s_at(&need_comp()?, &q0)?),
                    None => Element::QSym(antipode_eta_s(&need_comp()?)),
                },
                AntipodeMethod::F => {
                    let p = SharpParams::new(parse_scalar(a)?, parse_scalar(b)?);
                    Element::Free(antipode_f(&need_comp()?, &p))
                }
            };
            Ok(Output::Doc(Document::Element(out)))
        }
        Command::Pair { nsym, qsym } => {
            let (h, f) = match (parse_element(nsym)?, parse_element(qsym)?) {
                (Element::NSym(h), Element::QSym(f)) => (h, f),
                (Element::QSym(f), Element::NSym(h)) => (h, f),
                _ => return Err(usage("pair needs one NSym and one QSym element")),
            };
            Ok(Output::Scalar(pairing(&h, &f)))
        }
        Command::Stufufufflers { left, right } => {
            let (d, e) = (parse_comp(left)?, parse_comp(right)?);
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for f in enumerate_stufufufflers(d.len(), e.len()) {
                let st = f.stats(&d, &e)?;
                lines.push(format!("{} wt={} loss={} poise={}", f, st.wt, st.loss, st.poise));
                rows.push(json!({
                    "map": f.to_string(),
                    "wt": st.wt.entries(),
                    "loss": st.loss,
                    "poise": st.poise,
                }));
            }
            lines.push(format!("total: {}", rows.len()));
            Ok(Output::Text {
                text: lines.join("\n"),
                json: json!(rows),
            })
        }
        Command::Sharp {
            left,
            right,
            a,
            b,
            explicit,
        } => {
            let p = SharpParams::new(parse_scalar(a)?, parse_scalar(b)?);
            let out = if *explicit {
                sharp_explicit(&parse_comp(left)?, &parse_comp(right)?, &p)
            } else {
                sharp(&word(left)?, &word(right)?, &p)
            };
            Ok(Output::Doc(Document::Element(Element::Free(out))))
        }
        Command::Verify { maxdeg, suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                suite.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?
            };
            let reports = run_suites(&suites, *maxdeg);
            let passed = reports.iter().all(|r| r.passed());
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let mut text: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            let total: usize = reports.iter().map(|r| r.checks).sum();
            text.push(format!(
                "{}: {} families, {} checks, {} failing families (maxdeg {})",
                if passed { "PASS" } else { "FAIL" },
                reports.len(),
                total,
                failed,
                maxdeg
            ));
            let json = json!({
                "maxdeg": maxdeg,
                "passed": passed,
                "families": reports.iter().map(|r| json!({
                    "suite": r.suite.name(),
                    "family": r.family,
                    "checks": r.checks,
                    "passed": r.passed(),
                    "failures": r.failures,
                })).collect::<Vec<_>>(),
            });
            Ok(Output::Report {
                text: text.join("\n"),
                json,
                passed,
            })
        }
    }
}

fn q_value(cli: &Cli) -> Result<Option<BigRational>, Error> {
    cli.q.as_deref().map(parse_rational).transpose()
}

fn specialize(doc: Document, q0: &BigRational) -> Result<Document, Error> {
    Ok(match doc {
        Document::Element(e) => Document::Element(e.specialize(q0)?),
        Document::Tensor(t) => Document::Tensor(t.specialize(q0)?),
        Document::Series(s) => Document::Series(s.specialize(q0)?),
    })
}

fn render(cli: &Cli, out: Output) -> Result<(String, bool), Error> {
    let q0 = q_value(cli)?;
    Ok(match out {
        Output::Doc(doc) => {
            let doc = match &q0 {
                Some(q0) => specialize(doc, q0)?,
                None => doc,
            };
            let text = if cli.json {
                document_to_json(&doc).to_string()
            } else {
                match &doc {
                    Document::Element(e) => e.to_string(),
                    Document::Tensor(t) => t.to_string(),
                    Document::Series(s) => s.to_string(),
                }
            };
            (text, true)
        }
        Output::Scalar(c) => {
            let c = match &q0 {
                Some(q0) => Scalar::from_rational(&c.evaluate(q0)?),
                None => c,
            };
            let text = if cli.json {
                serde_json::to_string(&c).expect("plain data")
            } else {
                c.to_string()
            };
            (text, true)
        }
        Output::Text { text, json } => (if cli.json { json.to_string() } else { text }, true),
        Output::Report { text, json, passed } => (if cli.json { json.to_string() } else { text }, passed),
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Arithmetic(_) | Error::Pole(_) => EXIT_ARITHMETIC,
        Error::Validation(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|out| render(&cli, out)) {
        Ok((text, passed)) => {
            println!("{}", text);
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
        Err(e) => {
            eprintln!("qeta: {}", e);
            ExitCode::from(exit_code(&e))
        }
    }
}

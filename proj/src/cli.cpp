#include "segre/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <thread>

#include "segre/json_io.hpp"

namespace segre {
namespace {

constexpr const char* kUsage = R"(usage: segre <command> [options] [input]

commands:
  verify <oval>          check the oval property of a point set
  enumerate --q N        list ovals as JSON Lines plus a summary line
  reconstruct <oval>     compute the conic through an oval, with report
  check-theorem --q N    reconstruct every enumerated oval
  identities <f | oval>  run the identity audit on a polynomial or an oval

<oval> is a file path or inline JSON {"q": ..., "points": [[x,y,z], ...]};
<f> is an inline JSON array of coefficient codes, ascending degree
(requires --q).

options:
  --q N         field order, an odd prime power
  --mode M      enumeration mode: exhaustive (default) or sampled
  --seed S      RNG seed, sampled mode (default 0)
  --count C     target oval count, sampled mode (default 10)
  --workers W   worker threads for enumerate and check-theorem (default 1)
  --out PATH    write machine output to PATH instead of stdout
  --force       lift the q <= 7 guard on exhaustive enumeration
  --help        this text

Machine-readable JSON goes to stdout, progress and errors to stderr.
Exit codes: 0 verified, 1 mathematical violation, 2 input error.
The environment variable SEGRE_MAX_Q overrides the field-order cap.
)";

struct UsageError {
    std::string msg;
};

struct Options {
    std::string command;
    std::optional<std::string> input;
    std::optional<std::uint32_t> q;
    std::string mode = "exhaustive";
    bool mode_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t count = 10;
    bool count_set = false;
    std::size_t workers = 1;
    bool workers_set = false;
    std::string out_path;
    bool force = false;
    bool help = false;
};

std::uint64_t parse_uint(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError{std::string(what) + " expects a nonnegative integer, got \"" + s +
                         "\""};
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), nullptr, 10);
    if (errno != 0) throw UsageError{std::string(what) + " is out of range"};
    return v;
}

Options parse_args(const std::vector<std::string>& args) {
    Options o;
    std::vector<std::string> positional;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        const auto next = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size()) throw UsageError{std::string(flag) + " requires a value"};
            return args[++i];
        };
        if (a == "--help" || a == "-h") {
            o.help = true;
        } else if (a == "--q") {
            const std::uint64_t v = parse_uint(next("--q"), "--q");
            if (v < 2 || v > 0xffffffffull) throw UsageError{"--q out of range"};
            o.q = static_cast<std::uint32_t>(v);
        } else if (a == "--mode") {
            o.mode = next("--mode");
            o.mode_set = true;
            if (o.mode != "exhaustive" && o.mode != "sampled")
                throw UsageError{"--mode must be exhaustive or sampled"};
        } else if (a == "--seed") {
            o.seed = parse_uint(next("--seed"), "--seed");
            o.seed_set = true;
        } else if (a == "--count") {
            o.count = static_cast<std::size_t>(parse_uint(next("--count"), "--count"));
            o.count_set = true;
        } else if (a == "--workers") {
            o.workers = static_cast<std::size_t>(parse_uint(next("--workers"), "--workers"));
            if (o.workers == 0) throw UsageError{"--workers must be at least 1"};
            o.workers_set = true;
        } else if (a == "--out") {
            o.out_path = next("--out");
        } else if (a == "--force") {
            o.force = true;
        } else if (a.size() > 1 && a[0] == '-' && (a[1] == '-' || std::isalpha(a[1]))) {
            throw UsageError{"unknown flag " + a};
        } else {
            positional.push_back(a);
        }
    }
    if (o.help) return o;
    if (positional.empty()) throw UsageError{"missing command"};
    o.command = positional[0];
    if (positional.size() > 2) throw UsageError{"too many positional arguments"};
    if (positional.size() == 2) o.input = positional[1];

    const bool enumerating = o.command == "enumerate" || o.command == "check-theorem";
    if (!enumerating && (o.mode_set || o.seed_set || o.count_set || o.workers_set || o.force))
        throw UsageError{
            "--mode/--seed/--count/--workers/--force apply to enumerate and check-theorem"};
    if (enumerating) {
        if (!o.q) throw UsageError{o.command + " requires --q"};
        if (o.input) throw UsageError{o.command + " takes no positional input"};
        if (o.mode != "sampled" && (o.seed_set || o.count_set))
            throw UsageError{"--seed and --count require --mode sampled"};
    }
    if (o.command == "verify" || o.command == "reconstruct") {
        if (!o.input) throw UsageError{o.command + " requires an oval file or inline JSON"};
        if (o.q) throw UsageError{o.command + " reads the field order from its input; drop --q"};
    }
    if (o.command == "identities" && !o.input)
        throw UsageError{"identities requires a coefficient array or an oval input"};
    return o;
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

/// Machine output sink: --out redirects the JSON stream to a file, stdout
/// otherwise. stderr is never redirected.
class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
            os_ = &file_;
        }
    }
    void line(const Json& j) { *os_ << j.dump() << "\n"; }

  private:
    std::ofstream file_;
    std::ostream* os_;
};

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q) {
    if (q < 2) return std::nullopt;
    std::uint32_t p = q;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t n = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++n;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, n);
}

/// Order validation happens before any geometry is touched: even and
/// non-prime-power orders never reach Field construction.
std::optional<Field> make_odd_field(std::uint32_t q, std::uint32_t cap, std::ostream& err) {
    const auto pp = prime_power(q);
    if (!pp) {
        err << "error: q = " << q << " is not a prime power\n";
        return std::nullopt;
    }
    if (pp->first == 2) {
        err << "error: even order unsupported (q = " << q << ")\n";
        return std::nullopt;
    }
    if (q > cap) {
        err << "error: q = " << q << " exceeds the field-order cap " << cap
            << "; set SEGRE_MAX_Q to raise it\n";
        return std::nullopt;
    }
    return Field(q, cap);
}

Json load_payload(const std::string& input) {
    if (!input.empty() && (input.front() == '{' || input.front() == '[')) {
        return Json::parse(input);
    }
    std::ifstream f(input);
    if (!f) throw std::invalid_argument("cannot open input file: " + input);
    return Json::parse(f);
}

Json point_json(const ProjPoint& p) {
    return Json::array({p.coords[0].code, p.coords[1].code, p.coords[2].code});
}

std::vector<ProjPoint> points_from_file(const Plane& pl, const OvalFile& of) {
    std::vector<ProjPoint> pts;
    pts.reserve(of.points.size());
    for (const auto& c : of.points) pts.push_back(pl.point(c[0], c[1], c[2]));
    return pts;
}

Json envelope(const char* command, std::uint32_t q, const Field& F) {
    Json j;
    j["command"] = command;
    j["q"] = q;
    j["modulus"] = modulus_json(F);
    return j;
}

int cmd_verify(const Options& o, std::uint32_t cap, std::ostream& out, std::ostream& err) {
    const OvalFile of = oval_file_from_json(load_payload(*o.input));
    const auto F = make_odd_field(of.q, cap, err);
    if (!F) return 2;
    const Plane pl(*F);
    const std::vector<ProjPoint> pts = points_from_file(pl, of);
    Sink sink(o.out_path, out);
    Json v = envelope("verify", of.q, *F);

    std::vector<ProjPoint> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        v["ok"] = false;
        v["reason"] = "duplicate point";
        v["witness"] = Json::array({point_json(*dup)});
        sink.line(v);
        err << "not an oval: duplicate point\n";
        return 1;
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (pl.collinear(pts[i], pts[j], pts[k])) {
                    v["ok"] = false;
                    v["reason"] = "collinear triple";
                    v["witness"] =
                        Json::array({point_json(pts[i]), point_json(pts[j]), point_json(pts[k])});
                    sink.line(v);
                    err << "not an oval: collinear triple\n";
                    return 1;
                }
    if (pts.size() != static_cast<std::size_t>(of.q) + 1) {
        v["ok"] = false;
        v["reason"] = "wrong cardinality";
        v["expected"] = of.q + 1;
        v["actual"] = pts.size();
        sink.line(v);
        err << "not an oval: expected " << of.q + 1 << " points, got " << pts.size() << "\n";
        return 1;
    }
    v["ok"] = true;
    v["points"] = pts.size();
    sink.line(v);
    err << "oval verified: " << pts.size() << " points over GF(" << of.q << ")\n";
    return 0;
}

std::optional<EnumerationMode> build_mode(const Options& o, std::ostream& err) {
    if (o.mode == "exhaustive") {
        if (*o.q > 7 && !o.force) {
            err << "error: exhaustive enumeration above q = 7 is guarded; pass --force\n";
            return std::nullopt;
        }
        return EnumerationMode{ExhaustiveMode{o.workers}};
    }
    return EnumerationMode{SampledMode{o.seed, o.count, 10000}};
}

void summarize_mode(Json& j, const Options& o) {
    j["mode"] = o.mode;
    if (o.mode == "sampled") {
        j["seed"] = o.seed;
        j["requested"] = o.count;
    }
}

int cmd_enumerate(const Options& o, std::uint32_t cap, std::ostream& out, std::ostream& err) {
    const auto F = make_odd_field(*o.q, cap, err);
    if (!F) return 2;
    const auto mode = build_mode(o, err);
    if (!mode) return 2;
    const Plane pl(*F);
    err << "enumerating ovals over GF(" << *o.q << "), " << o.mode << " mode\n";
    const Stopwatch sw;
    const std::vector<Oval> ovals = enumerate_ovals(pl, *mode);
    Sink sink(o.out_path, out);
    for (const Oval& oval : ovals) sink.line(oval_to_json(*o.q, oval));
    Json summary = envelope("enumerate", *o.q, *F);
    summarize_mode(summary, o);
    summary["count"] = ovals.size();
    sink.line(summary);
    err << "enumerated " << ovals.size() << " ovals in " << sw.ms() << " ms\n";
    return 0;
}

int cmd_check_theorem(const Options& o, std::uint32_t cap, std::ostream& out,
                      std::ostream& err) {
    const auto F = make_odd_field(*o.q, cap, err);
    if (!F) return 2;
    const auto mode = build_mode(o, err);
    if (!mode) return 2;
    const Plane pl(*F);
    err << "enumerating ovals over GF(" << *o.q << "), " << o.mode << " mode\n";
    const Stopwatch sw;
    const std::vector<Oval> ovals = enumerate_ovals(pl, *mode);
    err << "reconstructing " << ovals.size() << " ovals\n";

    struct Violation {
        std::size_t index;
        std::string message;
        IdentityReport report;
    };
    const std::size_t n = ovals.size();
    const std::size_t nworkers = std::max<std::size_t>(1, std::min(o.workers, n ? n : 1));
    std::vector<unsigned char> ok(n, 0);
    std::vector<std::optional<Violation>> found(nworkers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < nworkers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = n * w / nworkers, hi = n * (w + 1) / nworkers;
            for (std::size_t i = lo; i < hi; ++i) {
                try {
                    segre_reconstruct(pl, ovals[i]);
                    ok[i] = 1;
                } catch (const TheoremViolation& tv) {
                    if (!found[w]) found[w] = Violation{i, tv.what(), tv.report};
                } catch (const Error& e) {
                    if (!found[w]) found[w] = Violation{i, e.what(), {}};
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();

    std::optional<Violation> first;
    for (const auto& f : found)
        if (f && (!first || f->index < first->index)) first = f;
    const std::size_t conics =
        static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));

    Sink sink(o.out_path, out);
    Json j = envelope("check-theorem", *o.q, *F);
    summarize_mode(j, o);
    j["ovals"] = n;
    j["conics"] = conics;
    j["all_ok"] = !first && conics == n;
    if (first) {
        Json vio;
        vio["oval"] = oval_to_json(*o.q, ovals[first->index]);
        vio["message"] = first->message;
        vio["report"] = report_to_json(*F, first->report);
        j["violation"] = std::move(vio);
        sink.line(j);
        err << "theorem violated on oval " << first->index << ": " << first->message << "\n";
        return 1;
    }
    sink.line(j);
    err << conics << "/" << n << " ovals are conics (" << sw.ms() << " ms)\n";
    return 0;
}

int cmd_reconstruct(const Options& o, std::uint32_t cap, std::ostream& out, std::ostream& err) {
    const OvalFile of = oval_file_from_json(load_payload(*o.input));
    const auto F = make_odd_field(of.q, cap, err);
    if (!F) return 2;
    const Plane pl(*F);
    const std::vector<ProjPoint> pts = points_from_file(pl, of);
    Sink sink(o.out_path, out);
    Json j = envelope("reconstruct", of.q, *F);
    std::optional<Oval> oval;
    try {
        oval.emplace(pl, pts);
    } catch (const Error& e) {
        j["ok"] = false;
        j["reason"] = e.what();
        sink.line(j);
        err << "not an oval: " << e.what() << "\n";
        return 1;
    }
    const Stopwatch sw;
    try {
        const auto [conic, rep] = segre_reconstruct(pl, *oval);
        j["ok"] = true;
        j["conic"] = conic_to_json(conic);
        j["report"] = report_to_json(*F, rep);
        sink.line(j);
        err << "reconstructed a conic through all " << oval->points().size() << " points ("
            << sw.ms() << " ms)\n";
        return 0;
    } catch (const TheoremViolation& tv) {
        j["ok"] = false;
        j["message"] = tv.what();
        j["report"] = report_to_json(*F, tv.report);
        sink.line(j);
        err << "reconstruction failed: " << tv.what() << "\n";
        return 1;
    }
}

int cmd_identities(const Options& o, std::uint32_t cap, std::ostream& out, std::ostream& err) {
    const Json payload = load_payload(*o.input);
    std::optional<Field> F;
    std::optional<AffineFunction> af;
    std::string id;
    std::optional<Json> failure;  // non-oval input verdict

    if (payload.is_array()) {
        if (!o.q) throw UsageError{"a coefficient array requires --q"};
        F = make_odd_field(*o.q, cap, err);
        if (!F) return 2;
        std::vector<Fe> coeffs;
        for (const Json& c : payload) {
            if (!c.is_number_unsigned())
                throw std::invalid_argument("polynomial coefficients must be unsigned codes");
            coeffs.push_back(F->element(c.get<std::uint32_t>()));
        }
        af = AffineFunction::from_poly(Poly(*F, std::move(coeffs)));
    } else {
        const OvalFile of = oval_file_from_json(payload);
        if (o.q && *o.q != of.q)
            throw UsageError{"--q disagrees with the oval input's field order"};
        F = make_odd_field(of.q, cap, err);
        if (!F) return 2;
        const Plane pl(*F);
        const std::vector<ProjPoint> pts = points_from_file(pl, of);
        try {
            const Oval oval(pl, pts);
            id = oval_id(oval);
            const auto [m, nov] = normalize_oval(pl, oval);
            (void)m;
            af = oval_to_function(pl, nov);
        } catch (const Error& e) {
            Json j = envelope("identities", of.q, *F);
            j["ok"] = false;
            j["reason"] = e.what();
            failure = std::move(j);
        }
    }

    Sink sink(o.out_path, out);
    if (failure) {
        sink.line(*failure);
        err << "identity audit aborted: input is not an oval\n";
        return 1;
    }
    const IdentityReport rep = run_identity_checks(*af, id);
    Json j;
    j["command"] = "identities";
    j["report"] = report_to_json(*F, rep);
    sink.line(j);
    err << (rep.all_ok() ? "all identity checks passed\n" : "identity checks failed\n");
    return rep.all_ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const Options o = parse_args(args);
        if (o.help) {
            err << kUsage;
            return 0;
        }
        std::uint32_t cap = Field::kDefaultMaxOrder;
        if (const char* env = std::getenv("SEGRE_MAX_Q")) {
            const std::string s(env);
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                throw UsageError{"SEGRE_MAX_Q must be a nonnegative integer"};
            cap = static_cast<std::uint32_t>(
                std::min<std::uint64_t>(std::strtoull(s.c_str(), nullptr, 10), 0xffffffffull));
        }
        if (o.command == "verify") return cmd_verify(o, cap, out, err);
        if (o.command == "enumerate") return cmd_enumerate(o, cap, out, err);
        if (o.command == "check-theorem") return cmd_check_theorem(o, cap, out, err);
        if (o.command == "reconstruct") return cmd_reconstruct(o, cap, out, err);
        if (o.command == "identities") return cmd_identities(o, cap, out, err);
        throw UsageError{"unknown command \"" + o.command + "\""};
    } catch (const UsageError& ue) {
        err << "error: " << ue.msg << "\n\n" << kUsage;
        return 2;
    } catch (const Json::exception& je) {
        err << "error: malformed JSON input: " << je.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ia) {
        err << "error: " << ia.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace segre

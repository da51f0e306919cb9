#include "opsf/families.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "opsf/error.hpp"

namespace opsf {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void require(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::ParameterDomain, msg);
}

const char* tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::ChebyshevT: return "chebyshev-t";
    case FamilyTag::ChebyshevU: return "chebyshev-u";
    case FamilyTag::Laguerre: return "laguerre";
    case FamilyTag::Gegenbauer: return "gegenbauer";
    case FamilyTag::Jacobi: return "jacobi";
    case FamilyTag::QUltraspherical: return "q-ultraspherical";
    case FamilyTag::Meixner: return "meixner";
    case FamilyTag::MeixnerPollaczek: return "meixner-pollaczek";
  }
  fail(ErrorKind::DomainError, "unknown family tag");
}

}  // namespace

FamilySpec FamilySpec::chebyshev_t() { return {FamilyTag::ChebyshevT, {}}; }

FamilySpec FamilySpec::chebyshev_u() { return {FamilyTag::ChebyshevU, {}}; }

FamilySpec FamilySpec::laguerre(const Rational& alpha) {
  require(alpha > -1, "laguerre needs alpha > -1");
  return {FamilyTag::Laguerre, {alpha}};
}

FamilySpec FamilySpec::gegenbauer(const Rational& lambda) {
  require(lambda > Rational(-1, 2) && lambda != 0,
          "gegenbauer needs lambda > -1/2 and lambda != 0");
  return {FamilyTag::Gegenbauer, {lambda}};
}

FamilySpec FamilySpec::jacobi(const Rational& alpha, const Rational& beta) {
  require(alpha > -1 && beta > -1, "jacobi needs alpha, beta > -1");
  return {FamilyTag::Jacobi, {alpha, beta}};
}

FamilySpec FamilySpec::q_ultraspherical(const Rational& beta, const Rational& q) {
  require(abs(q) < 1, "q-ultraspherical needs |q| < 1");
  require(abs(beta) < 1, "q-ultraspherical needs |beta| < 1");
  return {FamilyTag::QUltraspherical, {beta, q}};
}

FamilySpec FamilySpec::meixner(const Rational& beta, const Rational& c) {
  require(beta > 0, "meixner needs beta > 0");
  require(c > 0 && c < 1, "meixner needs 0 < c < 1");
  return {FamilyTag::Meixner, {beta, c}};
}

FamilySpec FamilySpec::meixner_pollaczek(const Rational& lambda,
                                         const Rational& cos_phi,
                                         const Rational& sin_phi) {
  require(lambda > 0, "meixner-pollaczek needs lambda > 0");
  require(sin_phi > 0, "meixner-pollaczek needs 0 < phi < pi, i.e. sin > 0");
  require(cos_phi * cos_phi + sin_phi * sin_phi == 1,
          "meixner-pollaczek needs cos^2 + sin^2 = 1");
  return {FamilyTag::MeixnerPollaczek, {lambda, cos_phi, sin_phi}};
}

const Rational& FamilySpec::param(int i) const {
  if (i < 0 || i >= static_cast<int>(params_.size()))
    fail(ErrorKind::DomainError, "family parameter index out of range");
  return params_[static_cast<size_t>(i)];
}

std::string FamilySpec::str() const {
  std::ostringstream out;
  out << tag_name(tag_);
  switch (tag_) {
    case FamilyTag::ChebyshevT:
    case FamilyTag::ChebyshevU:
      break;
    case FamilyTag::Laguerre:
      out << ":alpha=" << rational_str(params_[0]);
      break;
    case FamilyTag::Gegenbauer:
      out << ":lambda=" << rational_str(params_[0]);
      break;
    case FamilyTag::Jacobi:
      out << ":alpha=" << rational_str(params_[0])
          << ",beta=" << rational_str(params_[1]);
      break;
    case FamilyTag::QUltraspherical:
      out << ":beta=" << rational_str(params_[0])
          << ",q=" << rational_str(params_[1]);
      break;
    case FamilyTag::Meixner:
      out << ":beta=" << rational_str(params_[0])
          << ",c=" << rational_str(params_[1]);
      break;
    case FamilyTag::MeixnerPollaczek:
      out << ":lambda=" << rational_str(params_[0])
          << ",cos=" << rational_str(params_[1])
          << ",sin=" << rational_str(params_[2]);
      break;
  }
  return out.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
  const std::string t = strip(text);
  const size_t colon = t.find(':');
  const std::string name = strip(t.substr(0, colon));
  std::map<std::string, Rational> kv;
  if (colon != std::string::npos) {
    std::stringstream rest(t.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const size_t eq = item.find('=');
      if (eq == std::string::npos)
        fail(ErrorKind::ParseError, "expected key=value in family spec: " + item);
      const std::string key = strip(item.substr(0, eq));
      if (kv.count(key))
        fail(ErrorKind::ParseError, "duplicate family parameter: " + key);
      kv.emplace(key, parse_rational(strip(item.substr(eq + 1))));
    }
  }
  auto take = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
      fail(ErrorKind::ParseError, "family " + name + " needs parameter " + key);
    Rational v = it->second;
    kv.erase(it);
    return v;
  };
  auto done = [&]() {
    if (!kv.empty())
      fail(ErrorKind::ParseError,
           "unknown parameter for family " + name + ": " + kv.begin()->first);
  };

  FamilySpec spec = chebyshev_t();
  if (name == "chebyshev-t") {
    spec = chebyshev_t();
  } else if (name == "chebyshev-u") {
    spec = chebyshev_u();
  } else if (name == "laguerre") {
    spec = laguerre(take("alpha"));
  } else if (name == "gegenbauer") {
    spec = gegenbauer(take("lambda"));
  } else if (name == "jacobi") {
    Rational a = take("alpha"), b = take("beta");
    spec = jacobi(a, b);
  } else if (name == "q-ultraspherical") {
    Rational b = take("beta"), q = take("q");
    spec = q_ultraspherical(b, q);
  } else if (name == "meixner") {
    Rational b = take("beta"), c = take("c");
    spec = meixner(b, c);
  } else if (name == "meixner-pollaczek") {
    Rational l = take("lambda"), c = take("cos"), s = take("sin");
    spec = meixner_pollaczek(l, c, s);
  } else {
    fail(ErrorKind::ParseError, "unknown family: " + name);
  }
  done();
  return spec;
}

namespace {

// p_{n+1} = (u x + v) p_n - w p_{n-1} with rational u, v, w per step.
RPoly run_recurrence(int n, const RPoly& p0, const RPoly& p1,
                     const std::function<void(int, Rational&, Rational&, Rational&)>& step) {
  if (n == 0) return p0;
  RPoly prev = p0;
  RPoly cur = p1;
  const RPoly x = RPoly::variable();
  for (int k = 1; k < n; ++k) {
    Rational u, v, w;
    step(k, u, v, w);
    RPoly next = (x.scaled(u) + RPoly::constant(v)) * cur - prev.scaled(w);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

RPoly family_poly(const FamilySpec& f, int n) {
  if (n < 0) fail(ErrorKind::DomainError, "polynomial degree must be >= 0");
  const RPoly one = RPoly::constant(1);
  const RPoly x = RPoly::variable();
  switch (f.tag()) {
    case FamilyTag::ChebyshevT:
      return run_recurrence(n, one, x,
                            [](int, Rational& u, Rational& v, Rational& w) {
                              u = 2; v = 0; w = 1;
                            });
    case FamilyTag::ChebyshevU:
      return run_recurrence(n, one, x.scaled(2),
                            [](int, Rational& u, Rational& v, Rational& w) {
                              u = 2; v = 0; w = 1;
                            });
    case FamilyTag::Laguerre: {
      const Rational al = f.param(0);
      // (k+1) L_{k+1} = (2k+1+al-x) L_k - (k+al) L_{k-1}
      return run_recurrence(n, one, RPoly({al + 1, -1}),
                            [al](int k, Rational& u, Rational& v, Rational& w) {
                              const Rational d = k + 1;
                              u = Rational(-1) / d;
                              v = (2 * k + 1 + al) / d;
                              w = (k + al) / d;
                            });
    }
    case FamilyTag::Gegenbauer: {
      const Rational la = f.param(0);
      // (k+1) C_{k+1} = 2(k+la) x C_k - (k+2la-1) C_{k-1}
      return run_recurrence(n, one, x.scaled(2 * la),
                            [la](int k, Rational& u, Rational& v, Rational& w) {
                              const Rational d = k + 1;
                              u = 2 * (k + la) / d;
                              v = 0;
                              w = (k + 2 * la - 1) / d;
                            });
    }
    case FamilyTag::Jacobi: {
      const Rational al = f.param(0), be = f.param(1);
      const RPoly p1({(al - be) / 2, (al + be + 2) / 2});
      // 2(k+1)(k+1+al+be)(2k+al+be) P_{k+1} =
      //   (2k+al+be+1)[(2k+al+be+2)(2k+al+be) x + al^2-be^2] P_k
      //   - 2(k+al)(k+be)(2k+al+be+2) P_{k-1}
      return run_recurrence(
          n, one, p1, [al, be](int k, Rational& u, Rational& v, Rational& w) {
            const Rational s = 2 * k + al + be;
            const Rational d = 2 * (k + 1) * (k + 1 + al + be) * s;
            u = (s + 1) * (s + 2) * s / d;
            v = (s + 1) * (al * al - be * be) / d;
            w = 2 * (k + al) * (k + be) * (s + 2) / d;
          });
    }
    case FamilyTag::QUltraspherical: {
      const Rational be = f.param(0), q = f.param(1);
      const RPoly p1 = x.scaled(2 * (1 - be) / (1 - q));
      // (1-q^{k+1}) C_{k+1} = 2x(1-be q^k) C_k - (1-be^2 q^{k-1}) C_{k-1}
      return run_recurrence(
          n, one, p1, [be, q](int k, Rational& u, Rational& v, Rational& w) {
            const Rational d = 1 - rational_pow(q, k + 1);
            u = 2 * (1 - be * rational_pow(q, k)) / d;
            v = 0;
            w = (1 - be * be * rational_pow(q, k - 1)) / d;
          });
    }
    case FamilyTag::Meixner: {
      const Rational be = f.param(0), c = f.param(1);
      const RPoly p1({1, (c - 1) / (c * be)});
      // c(k+be) M_{k+1} = [(c-1)x + k + (k+be)c] M_k - k M_{k-1}
      return run_recurrence(
          n, one, p1, [be, c](int k, Rational& u, Rational& v, Rational& w) {
            const Rational d = c * (k + be);
            u = (c - 1) / d;
            v = (k + (k + be) * c) / d;
            w = Rational(k) / d;
          });
    }
    case FamilyTag::MeixnerPollaczek:
      fail(ErrorKind::ParameterDomain,
           "meixner-pollaczek is exposed only through its monic recurrence");
  }
  fail(ErrorKind::DomainError, "unknown family tag");
}

RecurrencePair family_recurrence(const FamilySpec& f) {
  RecurrencePair rec;
  rec.source = f.str();
  switch (f.tag()) {
    case FamilyTag::ChebyshevT:
      rec.a_fn = [](int) -> Rational { return 0; };
      rec.b_fn = [](int n) -> Rational { return n == 1 ? Rational(1, 2) : Rational(1, 4); };
      break;
    case FamilyTag::ChebyshevU:
      rec.a_fn = [](int) -> Rational { return 0; };
      rec.b_fn = [](int) -> Rational { return Rational(1, 4); };
      break;
    case FamilyTag::Laguerre: {
      const Rational al = f.param(0);
      rec.a_fn = [al](int n) -> Rational { return 2 * n + al + 1; };
      rec.b_fn = [al](int n) -> Rational { return n * (n + al); };
      break;
    }
    case FamilyTag::Gegenbauer: {
      const Rational la = f.param(0);
      rec.a_fn = [](int) -> Rational { return 0; };
      rec.b_fn = [la](int n) -> Rational {
        return n * (n + 2 * la - 1) / (4 * (n + la) * (n + la - 1));
      };
      break;
    }
    case FamilyTag::Jacobi: {
      const Rational al = f.param(0), be = f.param(1);
      rec.a_fn = [al, be](int n) -> Rational {
        if (n == 0) return (be - al) / (al + be + 2);
        const Rational s = 2 * n + al + be;
        return (be * be - al * al) / (s * (s + 2));
      };
      rec.b_fn = [al, be](int n) -> Rational {
        if (n == 1) {
          const Rational s = al + be + 2;
          return 4 * (al + 1) * (be + 1) / (s * s * (s + 1));
        }
        const Rational s = 2 * n + al + be;
        return 4 * n * (n + al) * (n + be) * (n + al + be) /
               (s * s * (s + 1) * (s - 1));
      };
      break;
    }
    case FamilyTag::QUltraspherical: {
      const Rational be = f.param(0), q = f.param(1);
      rec.a_fn = [](int) -> Rational { return 0; };
      rec.b_fn = [be, q](int n) -> Rational {
        const Rational qn1 = rational_pow(q, n - 1);
        return (1 - rational_pow(q, n)) * (1 - be * be * qn1) /
               (4 * (1 - be * qn1) * (1 - be * qn1 * q));
      };
      break;
    }
    case FamilyTag::Meixner: {
      const Rational be = f.param(0), c = f.param(1);
      rec.a_fn = [be, c](int n) -> Rational { return (n + (n + be) * c) / (1 - c); };
      rec.b_fn = [be, c](int n) -> Rational {
        return c * n * (n + be - 1) / ((1 - c) * (1 - c));
      };
      break;
    }
    case FamilyTag::MeixnerPollaczek: {
      const Rational la = f.param(0), co = f.param(1), si = f.param(2);
      rec.a_fn = [la, co, si](int n) -> Rational { return -(n + la) * co / si; };
      rec.b_fn = [la, si](int n) -> Rational {
        return n * (n + 2 * la - 1) / (4 * si * si);
      };
      break;
    }
  }
  return rec;
}

TridiagonalMatrix jacobi_matrix(const RecurrencePair& rec, int n) {
  if (n < 1) fail(ErrorKind::DomainError, "jacobi matrix needs N >= 1");
  TridiagonalMatrix t;
  t.diag.reserve(static_cast<size_t>(n));
  t.off.reserve(static_cast<size_t>(n - 1));
  for (int i = 0; i < n; ++i) t.diag.push_back(to_double(rec.a(i)));
  for (int i = 1; i < n; ++i) {
    const Rational b = rec.b(i);
    if (b <= 0)
      fail(ErrorKind::InvalidRecurrence,
           "jacobi matrix needs b_" + std::to_string(i) + " > 0, got " +
               rational_str(b));
    t.off.push_back(std::sqrt(to_double(b)));
  }
  return t;
}

RecurrencePair load_recurrence_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open recurrence file: " + path);
  std::string line;
  if (!std::getline(in, line) || strip(line) != "n,a_n,b_n")
    fail(ErrorKind::ParseError, "recurrence file needs header n,a_n,b_n");

  auto shared_a = std::make_shared<std::vector<Rational>>();
  auto shared_b = std::make_shared<std::vector<Rational>>();
  int expected = 0;
  while (std::getline(in, line)) {
    const std::string row = strip(line);
    if (row.empty()) continue;
    std::stringstream cells(row);
    std::string n_s, a_s, b_s;
    if (!std::getline(cells, n_s, ',') || !std::getline(cells, a_s, ','))
      fail(ErrorKind::ParseError, "recurrence row needs 3 fields: " + row);
    std::getline(cells, b_s);
    n_s = strip(n_s);
    long n = 0;
    try {
      size_t used = 0;
      n = std::stol(n_s, &used);
      if (used != n_s.size()) throw std::invalid_argument(n_s);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad index in recurrence row: " + row);
    }
    if (n != expected)
      fail(ErrorKind::GapInIndices,
           "expected row n=" + std::to_string(expected) + ", got n=" +
               std::to_string(n));
    shared_a->push_back(parse_rational(strip(a_s)));
    const std::string bs = strip(b_s);
    if (expected == 0) {
      shared_b->push_back(0);  // placeholder, never queried
    } else {
      if (bs.empty() || bs == "-" || bs == "\xe2\x80\x94")
        fail(ErrorKind::ParseError, "missing b_n for n >= 1: " + row);
      Rational b = parse_rational(bs);
      if (b <= 0)
        fail(ErrorKind::NonpositiveB,
             "b_" + std::to_string(n) + " = " + rational_str(b) +
                 " is not positive");
      shared_b->push_back(b);
    }
    ++expected;
  }
  if (expected == 0)
    fail(ErrorKind::ParseError, "recurrence file has no data rows");

  RecurrencePair rec;
  rec.max_index = expected - 1;
  rec.source = "csv:" + path;
  rec.a_fn = [shared_a](int n) -> Rational { return (*shared_a)[static_cast<size_t>(n)]; };
  rec.b_fn = [shared_b](int n) -> Rational { return (*shared_b)[static_cast<size_t>(n)]; };
  return rec;
}

}  // namespace opsf

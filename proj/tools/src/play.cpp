#include "play.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hunt/engine.hpp"

namespace hunt::cli {

PlaySession::PlaySession(const Graph& g, VertexSet start, std::size_t budget)
    : g_(g), territory_(std::move(start)), budget_(budget) {
  if (territory_.universe() != g.order()) {
    throw std::invalid_argument("start set universe does not match graph order");
  }
}

const VertexSet& PlaySession::shoot(const VertexSet& shot) {
  if (cleared()) throw std::invalid_argument("the rabbit has already been caught");
  if (shot.size() > budget_) {
    throw std::invalid_argument("shot uses " + std::to_string(shot.size()) + " hunters, budget is " +
                                std::to_string(budget_));
  }
  // Round 1 filters the start set; later rounds apply the full step.
  territory_ = round_ == 0 ? territory_ - shot : step(g_, territory_, shot);
  ++round_;
  return territory_;
}

namespace {

void show(const PlaySession& s, std::ostream& out, bool blind) {
  out << "round " << s.round() << ": territory has " << s.territory().size() << " vertices";
  if (!blind) out << " " << s.territory();
  out << "\n";
}

VertexSet parse_shot(const std::string& line, std::size_t n) {
  std::string cleaned = line;
  for (char& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream ss(cleaned);
  VertexSet shot(n);
  std::string tok;
  while (ss >> tok) {
    if (tok == "-") continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v >= n) {
      throw std::invalid_argument("'" + tok + "' is not a vertex of this graph");
    }
    shot.insert(static_cast<Vertex>(v));
  }
  return shot;
}

}  // namespace

std::size_t play_loop(PlaySession& session, std::istream& in, std::ostream& out,
                      const PlayOptions& options) {
  const std::size_t n = session.territory().universe();
  show(session, out, options.blind);
  std::string line;
  while (!session.cleared()) {
    out << "shoot up to " << session.budget() << " vertices> " << std::flush;
    if (!std::getline(in, line)) {
      out << "\ninput closed; rabbit still free after " << session.round() << " rounds\n";
      break;
    }
    if (line == "q" || line == "quit") {
      out << "quit after " << session.round() << " rounds\n";
      break;
    }
    try {
      session.shoot(parse_shot(line, n));
    } catch (const std::invalid_argument& e) {
      out << "rejected: " << e.what() << "\n";
      continue;
    }
    show(session, out, options.blind);
  }
  if (session.cleared()) out << "rabbit caught in " << session.round() << " rounds\n";
  return session.round();
}

}  // namespace hunt::cli

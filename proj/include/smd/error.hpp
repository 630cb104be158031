#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace smd {

using Vertex = std::size_t;

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- construction -----------------------------------------------------------

class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(Vertex v, std::size_t n)
      : Error("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n)),
        vertex(v) {}
  Vertex vertex;
};

class SelfLoop : public Error {
 public:
  explicit SelfLoop(Vertex v) : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
  Vertex vertex;
};

class DuplicateEdge : public Error {
 public:
  DuplicateEdge(Vertex u, Vertex v)
      : Error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}"), u(u), v(v) {}
  Vertex u;
  Vertex v;
};

class Disconnected : public Error {
 public:
  explicit Disconnected(Vertex unreachable)
      : Error("graph is disconnected: vertex " + std::to_string(unreachable) +
              " is unreachable from vertex 0"),
        vertex(unreachable) {}
  Vertex vertex;
};

class BadSize : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

// ---- distances / resolving sets --------------------------------------------

class TooLarge : public Error {
 public:
  using Error::Error;
};

// Signed distance is only single-valued on compatible graphs.
class IncompatibleGraph : public Error {
 public:
  IncompatibleGraph(Vertex u, Vertex v)
      : Error("graph is not distance compatible: witness pair (" + std::to_string(u) + "," +
              std::to_string(v) + ")"),
        witness(u, v) {}
  std::pair<Vertex, Vertex> witness;
};

class EmptyLandmarks : public Error {
 public:
  EmptyLandmarks() : Error("landmark set is empty") {}
};

class DuplicateLandmark : public Error {
 public:
  explicit DuplicateLandmark(Vertex v)
      : Error("landmark " + std::to_string(v) + " listed twice"), vertex(v) {}
  Vertex vertex;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::size_t n, std::size_t cap)
      : Error("graph has " + std::to_string(n) + " vertices, solver cap is " + std::to_string(cap)),
        n(n),
        cap(cap) {}
  std::size_t n;
  std::size_t cap;
};

// ---- families / trees -------------------------------------------------------

class SignatureLengthMismatch : public Error {
 public:
  SignatureLengthMismatch(std::size_t expected, std::size_t got)
      : Error("signature has " + std::to_string(got) + " signs, family needs " +
              std::to_string(expected)),
        expected(expected),
        got(got) {}
  std::size_t expected;
  std::size_t got;
};

class NotAStar : public Error {
 public:
  NotAStar() : Error("underlying graph is not a star") {}
};

class NotAWheel : public Error {
 public:
  NotAWheel() : Error("underlying graph is not a wheel W_n with n >= 4") {}
};

class NotComplete : public Error {
 public:
  NotComplete() : Error("underlying graph is not complete") {}
};

class NotATree : public Error {
 public:
  NotATree() : Error("underlying graph is not a tree") {}
};

class IsAPath : public Error {
 public:
  IsAPath() : Error("tree is a path (dimension 1, no major vertices)") {}
};

class FormulaNotApplicable : public Error {
 public:
  explicit FormulaNotApplicable(Vertex t)
      : Error("special exterior major vertex " + std::to_string(t) + " has terminal degree 2"),
        vertex(t) {}
  Vertex vertex;
};

// ---- verification / io ------------------------------------------------------

class UnknownTheorem : public Error {
 public:
  explicit UnknownTheorem(const std::string& id) : Error("unknown theorem id '" + id + "'"), id(id) {}
  std::string id;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;  // 1-based; 0 when the error is not tied to a line
};

}  // namespace smd

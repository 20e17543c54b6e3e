#pragma once

#include <stdexcept>
#include <string>

namespace matchgraph
{
    /// A search or enumeration would exceed its configured size or node budget.
    class CapacityError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class NotEulerianError : public std::runtime_error
    {
        public:
            NotEulerianError(const std::string & what, int vertex) :
                std::runtime_error(what),
                _vertex(vertex)
            {
            }

            /// A vertex witnessing the failure (odd degree, or unreachable from the start).
            auto vertex() const -> int { return _vertex; }

        private:
            int _vertex;
    };

    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & what, int line) :
                std::runtime_error("line " + std::to_string(line) + ": " + what),
                _line(line)
            {
            }

            auto line() const -> int { return _line; }

        private:
            int _line;
    };

    /// A supplied certificate (extremal set, locally Eulerian family, block list) is invalid.
    class CertificateError : public std::runtime_error
    {
        public:
            CertificateError(const std::string & clause, const std::string & detail) :
                std::runtime_error(clause + ": " + detail),
                _clause(clause)
            {
            }

            auto clause() const -> const std::string & { return _clause; }

        private:
            std::string _clause;
    };
}

#include <tclique/atlas.hh>
#include <tclique/canonical.hh>
#include <tclique/chi.hh>
#include <tclique/containment.hh>
#include <tclique/errors.hh>
#include <tclique/trn_io.hh>

#include <chrono>
#include <cstring>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <zlib.h>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace tclique
{
    using std::to_string;

    namespace
    {
        constexpr char magic[4] = {'T', 'C', 'A', '1'};
        constexpr std::uint64_t header_size = 12;
        constexpr std::uint32_t max_payload = 1U << 24;

        auto put_u32(string & out, std::uint32_t v) -> void
        {
            for (int i = 0; i < 4; ++i)
                out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
        }

        auto get_u32(const string & s, std::uint64_t at) -> std::uint32_t
        {
            std::uint32_t v = 0;
            for (int i = 3; i >= 0; --i)
                v = (v << 8) | static_cast<unsigned char>(s[at + static_cast<std::uint64_t>(i)]);
            return v;
        }

        auto crc_of(const char * data, std::size_t size) -> std::uint32_t
        {
            return static_cast<std::uint32_t>(crc32(0L, reinterpret_cast<const Bytef *>(data), static_cast<uInt>(size)));
        }

        auto now_seconds() -> std::int64_t
        {
            return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
        }

        auto find_magic(const string & bytes, std::uint64_t from) -> std::uint64_t
        {
            auto at = bytes.find(string(magic, 4), from);
            return at == string::npos ? bytes.size() : at;
        }

        auto read_from(const string & path, std::uint64_t offset) -> string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                return {};
            in.seekg(static_cast<std::streamoff>(offset));
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }

        auto write_all(int fd, const string & bytes, const string & path) -> void
        {
            std::size_t done = 0;
            while (done < bytes.size()) {
                auto w = ::write(fd, bytes.data() + done, bytes.size() - done);
                if (w < 0)
                    throw std::runtime_error("atlas: write to " + path + " failed: " + std::strerror(errno));
                done += static_cast<std::size_t>(w);
            }
            if (::fsync(fd) != 0)
                throw std::runtime_error("atlas: fsync of " + path + " failed: " + std::strerror(errno));
        }

        class WriterLock
        {
        public:
            explicit WriterLock(const string & path) : _fd(::open((path + ".lock").c_str(), O_CREAT | O_RDWR, 0644))
            {
                if (_fd < 0 || ::flock(_fd, LOCK_EX) != 0)
                    throw std::runtime_error("atlas: cannot lock " + path + ".lock: " + std::strerror(errno));
            }
            ~WriterLock()
            {
                ::flock(_fd, LOCK_UN);
                ::close(_fd);
            }
            WriterLock(const WriterLock &) = delete;
            auto operator=(const WriterLock &) -> WriterLock & = delete;

        private:
            int _fd;
        };
    }

    auto to_json(const AtlasRecord & r) -> json
    {
        json j{{"schema", 1}, {"code", r.code}, {"n", r.n}, {"omega_lower", r.omega_lower}, {"omega_upper", r.omega_upper},
            {"omega_a", r.omega_a}, {"omega_d", r.omega_d}, {"created", r.created}, {"updated", r.updated}, {"omega_mode", r.omega_mode},
            {"chi_mode", r.chi_mode}, {"trn", r.trn}};
        j["chi"] = r.chi ? json(*r.chi) : json(nullptr);
        return j;
    }

    auto atlas_record_from_json(const json & j) -> AtlasRecord
    {
        AtlasRecord r;
        r.code = j.at("code").get<string>();
        r.n = j.at("n").get<int>();
        r.omega_lower = j.at("omega_lower").get<int>();
        r.omega_upper = j.at("omega_upper").get<int>();
        if (! j.at("chi").is_null())
            r.chi = j.at("chi").get<int>();
        r.omega_a = j.at("omega_a").get<int>();
        r.omega_d = j.at("omega_d").get<int>();
        r.created = j.at("created").get<std::int64_t>();
        r.updated = j.at("updated").get<std::int64_t>();
        r.omega_mode = j.at("omega_mode").get<string>();
        r.chi_mode = j.at("chi_mode").get<string>();
        r.trn = j.value("trn", "");
        return r;
    }

    auto validate_record(const AtlasRecord & r) -> void
    {
        if (r.code.empty())
            throw InvalidInput("atlas record without a code");
        if (r.n < 0 || r.omega_lower < 0 || r.omega_lower > r.omega_upper)
            throw InvalidInput("atlas record " + r.code + ": omega bounds out of order");
        if (r.chi && r.omega_lower > *r.chi)
            throw InvalidInput("atlas record " + r.code + ": omega exceeds chi");
        if (r.n >= 1 && (r.omega_a < 1 || r.omega_d < 1))
            throw InvalidInput("atlas record " + r.code + ": family indices must be positive");
    }

    auto compute_atlas_record(const Tournament & t, const AtlasComputeOptions & options) -> AtlasRecord
    {
        AtlasRecord r;
        r.n = t.size();
        r.code = to_hex(canonical_code(t));
        r.trn = format_trn(t);
        try {
            auto w = omega_dir(t, options.omega);
            r.omega_lower = w.lower;
            r.omega_upper = w.upper;
            r.omega_mode = w.status == SolveStatus::exact ? "exact" : "exact-budget";
        } catch (const SizeLimitExceeded &) {
            OmegaBoundsOptions bo;
            bo.exact = options.omega;
            auto b = omega_dir_bounds(t, bo);
            r.omega_lower = b.lower;
            r.omega_upper = b.upper;
            r.omega_mode = "bounds";
        }
        r.chi_mode = "skipped";
        if (r.n <= options.chi_limit) {
            auto c = chi_dir(t, ChiOptions{options.chi_limit, -1});
            if (c.status == SolveStatus::exact) {
                r.chi = c.value;
                r.chi_mode = "exact";
            }
        }
        r.omega_a = family_index(t, Family::A).value;
        r.omega_d = family_index(t, Family::D).value;
        return r;
    }

    auto atlas_frame(const string & payload) -> string
    {
        string out(magic, 4);
        put_u32(out, static_cast<std::uint32_t>(payload.size()));
        put_u32(out, crc_of(payload.data(), payload.size()));
        return out + payload;
    }

    Atlas::Atlas(string path) : _path(std::move(path)) { refresh(); }

    auto Atlas::reset() -> void
    {
        _latest.clear();
        _quarantined.clear();
        _offset = 0;
        _appended = 0;
    }

    auto Atlas::scan(const string & bytes, std::uint64_t base) -> std::uint64_t
    {
        std::uint64_t pos = 0, size = bytes.size();
        auto quarantine = [&](std::uint64_t from, std::uint64_t to, string why) {
            _quarantined.push_back({base + from, to - from, std::move(why)});
            return to;
        };
        while (pos < size) {
            if (std::memcmp(bytes.data() + pos, magic, std::min<std::uint64_t>(4, size - pos)) != 0) {
                pos = quarantine(pos, find_magic(bytes, pos + 1), "bad frame marker");
                continue;
            }
            if (size - pos < header_size)
                break;
            auto len = get_u32(bytes, pos + 4);
            auto crc = get_u32(bytes, pos + 8);
            auto next = find_magic(bytes, pos + 4);
            if (len > max_payload || pos + header_size + len > size) {
                // a torn tail is the only frame left; anything else is a damaged length
                if (len <= max_payload && next == size)
                    break;
                pos = quarantine(pos, next, "bad payload length");
                continue;
            }
            const char * payload = bytes.data() + pos + header_size;
            if (crc_of(payload, len) != crc) {
                pos = quarantine(pos, std::min(next, pos + header_size + len), "checksum mismatch");
                continue;
            }
            try {
                auto rec = atlas_record_from_json(json::parse(payload, payload + len));
                _latest[rec.code] = rec;
                ++_appended;
            } catch (const std::exception & e) {
                quarantine(pos, pos + header_size + len, string("unreadable payload: ") + e.what());
            }
            pos += header_size + len;
        }
        return pos;
    }

    auto Atlas::refresh() -> void
    {
        struct stat st{};
        if (::stat(_path.c_str(), &st) != 0) {
            reset();
            _inode = 0;
            return;
        }
        auto inode = static_cast<std::uint64_t>(st.st_ino);
        if (inode != _inode || static_cast<std::uint64_t>(st.st_size) < _offset) {
            reset();
            _inode = inode;
        }
        auto bytes = read_from(_path, _offset);
        _offset += scan(bytes, _offset);
    }

    auto Atlas::get(const string & code) -> optional<AtlasRecord>
    {
        refresh();
        auto it = _latest.find(code);
        if (it == _latest.end())
            return std::nullopt;
        return it->second;
    }

    auto Atlas::records() -> vector<AtlasRecord>
    {
        refresh();
        vector<AtlasRecord> out;
        for (auto & [_, r] : _latest)
            out.push_back(r);
        return out;
    }

    auto Atlas::upsert(AtlasRecord record) -> AtlasRecord
    {
        validate_record(record);
        WriterLock lock(_path);
        refresh();
        auto now = now_seconds();
        auto it = _latest.find(record.code);
        record.created = it != _latest.end() ? it->second.created : (record.created ? record.created : now);
        record.updated = now;
        int fd = ::open(_path.c_str(), O_CREAT | O_WRONLY | O_APPEND, 0644);
        if (fd < 0)
            throw std::runtime_error("atlas: cannot open " + _path + ": " + std::strerror(errno));
        try {
            write_all(fd, atlas_frame(to_json(record).dump()), _path);
        } catch (...) {
            ::close(fd);
            throw;
        }
        ::close(fd);
        refresh();
        return record;
    }

    auto Atlas::compact() -> long
    {
        WriterLock lock(_path);
        refresh();
        if (! _quarantined.empty()) {
            auto all = read_from(_path, 0);
            std::ofstream q(_path + ".quarantine", std::ios::binary | std::ios::app);
            for (auto & span : _quarantined) {
                json j{{"offset", span.offset}, {"length", span.length}, {"reason", span.reason}};
                string hex;
                static const char digits[] = "0123456789abcdef";
                for (auto c : all.substr(span.offset, span.length)) {
                    hex.push_back(digits[(static_cast<unsigned char>(c) >> 4) & 0xf]);
                    hex.push_back(digits[static_cast<unsigned char>(c) & 0xf]);
                }
                j["bytes"] = hex;
                q << j.dump() << "\n";
            }
            if (! q)
                throw std::runtime_error("atlas: cannot write " + _path + ".quarantine");
        }
        long dropped = _appended - static_cast<long>(_latest.size());
        string body;
        for (auto & [_, r] : _latest)
            body += atlas_frame(to_json(r).dump());
        auto tmp = _path + ".tmp";
        int fd = ::open(tmp.c_str(), O_CREAT | O_WRONLY | O_TRUNC, 0644);
        if (fd < 0)
            throw std::runtime_error("atlas: cannot open " + tmp + ": " + std::strerror(errno));
        try {
            write_all(fd, body, tmp);
        } catch (...) {
            ::close(fd);
            throw;
        }
        ::close(fd);
        if (::rename(tmp.c_str(), _path.c_str()) != 0)
            throw std::runtime_error("atlas: cannot replace " + _path + ": " + std::strerror(errno));
        _inode = 0;
        refresh();
        return dropped;
    }
}

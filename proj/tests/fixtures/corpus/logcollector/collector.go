package logcollector

import (
	"bufio"
	"os"
	"strings"
)

type LogRecord struct {
	Timestamp string
	Severity  string
	Message   string
}

func TailFile(path string, maxRecords int) ([]LogRecord, error) {
	handle, err := os.Open(path)
	if err != nil {
		return nil, err
	}
	defer handle.Close()

	var records []LogRecord
	scanner := bufio.NewScanner(handle)
	for scanner.Scan() {
		record, ok := parseLogLine(scanner.Text())
		if !ok {
			continue
		}
		records = append(records, record)
		if len(records) > maxRecords {
			records = records[1:]
		}
	}
	return records, scanner.Err()
}

func parseLogLine(line string) (LogRecord, bool) {
	fields := strings.SplitN(line, " ", 3)
	if len(fields) < 3 {
		return LogRecord{}, false
	}
	return LogRecord{
		Timestamp: fields[0],
		Severity:  fields[1],
		Message:   fields[2],
	}, true
}

package chatclient

import (
	"bufio"
	"net"
	"time"
)

type Connection struct {
	socket   net.Conn
	reader   *bufio.Reader
	nickname string
}

func DialServer(address, nickname string) (*Connection, error) {
	socket, err := net.DialTimeout("tcp", address, 5*time.Second)
	if err != nil {
		return nil, err
	}
	conn := &Connection{
		socket:   socket,
		reader:   bufio.NewReader(socket),
		nickname: nickname,
	}
	return conn, nil
}

func (conn *Connection) SendMessage(channel, body string) error {
	payload := conn.nickname + "\t" + channel + "\t" + body + "\n"
	_, err := conn.socket.Write([]byte(payload))
	return err
}

func (conn *Connection) ReceiveMessage() (string, error) {
	line, err := conn.reader.ReadString('\n')
	if err != nil {
		return "", err
	}
	return line, nil
}
